#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "sylres/errors.hpp"
#include "sylres/families.hpp"
#include "sylres/psub.hpp"
#include "test_util.hpp"

using namespace sylres;
using namespace testutil;

namespace {

using ElemSet = std::set<Permutation>;

// exhaustive oracle: all subgroups of a small group as element sets
std::set<ElemSet> all_subgroups(const PermGroup& g) {
  auto elems = g.elements(5000);
  std::set<ElemSet> found{{Permutation::identity(g.degree())}};
  std::vector<ElemSet> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<ElemSet> next;
    for (const auto& h : frontier)
      for (const auto& x : elems) {
        if (h.count(x)) continue;
        std::vector<Permutation> gens(h.begin(), h.end());
        gens.push_back(x);
        auto cl = brute_closure(g.degree(), gens);
        if (found.insert(cl).second) next.push_back(cl);
      }
    frontier = std::move(next);
  }
  return found;
}

ElemSet elem_set(const PermGroup& g) {
  auto v = g.elements(5000);
  return ElemSet(v.begin(), v.end());
}

bool is_p_group(const PermGroup& g, u64 p) {
  u64 n = g.order_u64(200000);
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

TEST_CASE("sylow subgroups: order, containment, conjugate coverage") {
  struct Case {
    PermGroup g;
    u64 p;
  };
  std::vector<Case> cases = {
      {symmetric(4), 2},  {symmetric(4), 3},  {symmetric(5), 2},
      {alternating(5), 2}, {alternating(5), 3}, {alternating(5), 5},
      {make_family(Family::sl2, 3), 2},
      {make_family(Family::gl2, 3), 2},
      {grp(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}), 7},
  };
  for (auto& c : cases) {
    PermGroup p_grp = sylow_subgroup(c.g, c.p);
    u64 n = c.g.order_u64(200000);
    CHECK(p_grp.order() == (unsigned long)p_part(n, c.p));
    CHECK(is_p_group(p_grp, c.p));
    CHECK(p_grp.is_subgroup_of(c.g));
  }
}

TEST_CASE("sylow 2-subgroup of S4 is dihedral of order 8") {
  PermGroup p_grp = sylow_subgroup(symmetric(4), 2);
  REQUIRE(p_grp.order() == 8);
  // element order profile of D8: orders 1,2,2,2,2,2,4,4
  std::multiset<unsigned long long> orders;
  for (const auto& e : p_grp.elements(100)) orders.insert(e.order());
  CHECK(orders == std::multiset<unsigned long long>{1, 2, 2, 2, 2, 2, 4, 4});
}

TEST_CASE("subgroups_of_index matches exhaustive enumeration") {
  for (const PermGroup& p_grp :
       {make_family(Family::dihedral, 8), make_family(Family::quaternion, 8),
        make_family(Family::dihedral, 16),
        make_family(Family::quaternion, 16),
        make_family(Family::semidihedral, 16),
        grp(8, {"(1,2,3,4,5,6,7,8)"}),
        grp(6, {"(1,2)", "(3,4)", "(5,6)"})}) {
    auto oracle = all_subgroups(p_grp);
    auto elems = p_grp.elements(5000);
    u64 n = p_grp.order_u64(5000);
    for (u64 index : divisors(n)) {
      auto recs = subgroups_of_index(p_grp, index);
      // collect the full conjugacy classes the records claim to represent
      std::set<ElemSet> covered;
      u64 claimed_class_sizes = 0;
      for (const auto& r : recs) {
        CHECK(r.index_in_parent == index);
        CHECK(r.subgroup.order() * (unsigned long)index ==
              p_grp.order());
        CHECK(r.subgroup.is_subgroup_of(p_grp));
        claimed_class_sizes += r.conjugacy_class_size;
        for (const auto& x : elems) {
          ElemSet conj;
          for (const auto& h : r.subgroup.elements(5000))
            conj.insert(h.conjugate(x));
          covered.insert(conj);
        }
      }
      // the oracle's subgroups of this order
      std::set<ElemSet> expected;
      for (const auto& h : oracle)
        if (h.size() * index == n) expected.insert(h);
      CHECK(covered == expected);
      CHECK(claimed_class_sizes == expected.size());
      // records are pairwise non-conjugate
      for (size_t i = 0; i < recs.size(); ++i)
        for (size_t j = i + 1; j < recs.size(); ++j) {
          bool conj = false;
          auto si = elem_set(recs[i].subgroup);
          for (const auto& x : elems) {
            ElemSet c;
            for (const auto& h : si) c.insert(h.conjugate(x));
            if (c == elem_set(recs[j].subgroup)) conj = true;
          }
          CHECK(!conj);
        }
    }
  }
}

TEST_CASE("subgroups_of_index validates its inputs") {
  CHECK_THROWS_AS(subgroups_of_index(symmetric(4), 2), NotAPGroup);
  PermGroup d8 = make_family(Family::dihedral, 8);
  CHECK_THROWS(subgroups_of_index(d8, 3));
}

TEST_CASE("O^{p'}: normal closure of the p-elements") {
  PermGroup s4 = symmetric(4);
  CHECK(o_upper_pprime(s4, 2).order() == 24);
  CHECK(o_upper_pprime(s4, 3).order() == 12);  // A4
  PermGroup c6 = grp(6, {"(1,2,3,4,5,6)"});
  CHECK(o_upper_pprime(c6, 2).order() == 2);
  CHECK(o_upper_pprime(c6, 3).order() == 3);
  CHECK(o_upper_pprime(alternating(5), 2).order() == 60);
  CHECK(o_upper_pprime(alternating(5), 5).order() == 60);
}

TEST_CASE("O_p and O_{p'}") {
  PermGroup s4 = symmetric(4);
  CHECK(o_lower(s4, 2, Core::p_core).order() == 4);  // V4
  CHECK(o_lower(s4, 3, Core::p_core).order() == 1);
  CHECK(o_lower(s4, 3, Core::p_prime_core).order() == 4);  // O_{3'} = V4
  CHECK(o_lower(s4, 2, Core::p_prime_core).order() == 1);
  PermGroup c6 = grp(6, {"(1,2,3,4,5,6)"});
  CHECK(o_lower(c6, 2, Core::p_core).order() == 2);
  CHECK(o_lower(c6, 2, Core::p_prime_core).order() == 3);
  PermGroup f20 = grp(5, {"(1,2,3,4,5)", "(2,3,5,4)"});
  CHECK(o_lower(f20, 5, Core::p_core).order() == 5);
  CHECK(o_lower(f20, 2, Core::p_core).order() == 1);
}

TEST_CASE("p-solvability") {
  for (u64 p : {2, 3})
    CHECK(is_p_solvable(symmetric(4), p));
  CHECK(is_p_solvable(make_family(Family::sl2, 3), 2));
  CHECK(is_p_solvable(make_family(Family::gl2, 3), 3));
  for (u64 p : {2, 3, 5}) CHECK(!is_p_solvable(alternating(5), p));
  CHECK(is_p_solvable(alternating(5), 7));  // p does not divide |G|
  for (u64 p : {2, 3, 5}) CHECK(!is_p_solvable(symmetric(5), p));
  CHECK(!is_p_solvable(make_family(Family::sl2, 5), 2));
}

TEST_CASE("normal subgroups of the classics") {
  auto orders = [](const PermGroup& g) {
    std::multiset<unsigned long> o;
    for (const auto& n : normal_subgroups(g)) o.insert(n.order().get_ui());
    return o;
  };
  CHECK(orders(symmetric(4)) == std::multiset<unsigned long>{1, 4, 12, 24});
  CHECK(orders(alternating(5)) == std::multiset<unsigned long>{1, 60});
  CHECK(orders(make_family(Family::quaternion, 8)) ==
        std::multiset<unsigned long>{1, 2, 4, 4, 4, 8});
  CHECK(orders(alternating(4)) == std::multiset<unsigned long>{1, 4, 12});
  // every reported subgroup is in fact normal
  PermGroup s4 = symmetric(4);
  for (const auto& n : normal_subgroups(s4))
    for (const auto& x : s4.elements(100))
      for (const auto& h : n.elements(100))
        CHECK(n.contains(h.conjugate(x)));
}

TEST_CASE("center and derived subgroup") {
  CHECK(center(symmetric(4)).order() == 1);
  CHECK(center(make_family(Family::quaternion, 8)).order() == 2);
  CHECK(center(make_family(Family::dihedral, 8)).order() == 2);
  CHECK(center(grp(6, {"(1,2,3,4,5,6)"})).order() == 6);
  CHECK(derived_subgroup(symmetric(4)).order() == 12);
  CHECK(derived_subgroup(alternating(4)).order() == 4);
  CHECK(derived_subgroup(alternating(5)).order() == 60);
  CHECK(derived_subgroup(make_family(Family::dihedral, 8)).order() == 2);
  // brute-force check on S4: derived subgroup equals the set generated by
  // commutators
  PermGroup s4 = symmetric(4);
  std::vector<Permutation> comms;
  for (const auto& a : s4.elements(100))
    for (const auto& b : s4.elements(100))
      comms.push_back(a.inverse() * b.inverse() * a * b);
  auto brute = brute_closure(4, comms);
  PermGroup d = derived_subgroup(s4);
  CHECK(d.order() == (unsigned long)brute.size());
  for (const auto& e : brute) CHECK(d.contains(e));
}

TEST_CASE("normalizer against brute force") {
  PermGroup s4 = symmetric(4);
  PermGroup syl3 = sylow_subgroup(s4, 3);
  PermGroup n3 = normalizer(s4, syl3);
  CHECK(n3.order() == 6);  // four Sylow 3-subgroups
  PermGroup syl2 = sylow_subgroup(s4, 2);
  CHECK(normalizer(s4, syl2).order() == 8);  // self-normalizing
  // brute force: elements x with syl3^x = syl3
  u64 brute = 0;
  for (const auto& x : s4.elements(100)) {
    bool norm = true;
    for (const auto& h : syl3.elements(100))
      if (!syl3.contains(h.conjugate(x))) norm = false;
    if (norm) ++brute;
  }
  CHECK(n3.order() == (unsigned long)brute);
}

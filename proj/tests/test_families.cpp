#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sylres/checker.hpp"
#include "sylres/errors.hpp"
#include "sylres/families.hpp"
#include "sylres/gf.hpp"
#include "sylres/psub.hpp"
#include "test_util.hpp"

using namespace sylres;
using namespace testutil;

TEST_CASE("finite field arithmetic") {
  for (u64 q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    const GF& f = GF::get(q);
    // field axioms by brute force
    for (u64 a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (u64 b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (u64 c = 0; c < q; ++c)
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
    // the multiplicative group is cyclic of order q - 1
    u64 g = f.generator();
    std::set<u64> powers;
    u64 x = 1;
    for (u64 i = 0; i + 1 < q; ++i) powers.insert(x), x = f.mul(x, g);
    CHECK(powers.size() == q - 1);
    CHECK(f.element_order(g) == q - 1);
  }
  CHECK_THROWS_AS(GF::get(6), UnsupportedParameter);
  CHECK_THROWS_AS(GF::get(16), UnsupportedParameter);
}

TEST_CASE("family constructors produce the advertised orders") {
  CHECK(make_family(Family::dihedral, 4).order() == 4);
  CHECK(make_family(Family::dihedral, 128).order() == 128);
  CHECK(make_family(Family::quaternion, 8).order() == 8);
  CHECK(make_family(Family::quaternion, 64).order() == 64);
  CHECK(make_family(Family::semidihedral, 16).order() == 16);
  CHECK(make_family(Family::wreath, 2).order() == 32);
  CHECK(make_family(Family::sl2, 5).order() == 120);
  CHECK(make_family(Family::sl2, 9).order() == 720);
  CHECK(make_family(Family::sl2, 13).order() == 2184);
  CHECK(make_family(Family::gl2, 5).order() == 480);
  CHECK(make_family(Family::gl2, 7).order() == 2016);
  CHECK(make_family(Family::psl2, 7).order() == 168);
  CHECK(make_family(Family::psl2, 4).order() == 60);
}

TEST_CASE("family constructors reject unsupported parameters") {
  CHECK_THROWS_AS(make_family(Family::dihedral, 7), UnsupportedParameter);
  CHECK_THROWS_AS(make_family(Family::quaternion, 12), UnsupportedParameter);
  CHECK_THROWS_AS(make_family(Family::semidihedral, 8),
                  UnsupportedParameter);
  CHECK_THROWS_AS(make_family(Family::wreath, 9), UnsupportedParameter);
  CHECK_THROWS_AS(make_family(Family::sl2, 6), UnsupportedParameter);
  CHECK_THROWS_AS(make_family(Family::gl2, 11), UnsupportedParameter);
  CHECK_THROWS_AS(family_from_name("suzuki"), ParseError);
  CHECK(family_from_name("sl2") == Family::sl2);
}

TEST_CASE("structure fingerprints") {
  // quaternion: unique involution
  for (u64 n : {8, 16, 32}) {
    PermGroup q = make_family(Family::quaternion, n);
    int invs = 0;
    for (const auto& e : q.elements(100))
      if (e.order() == 2) ++invs;
    CHECK(invs == 1);
  }
  // dihedral: n/2 reflections generate, derived subgroup cyclic of index 4
  PermGroup d16 = make_family(Family::dihedral, 16);
  CHECK(derived_subgroup(d16).order() == 4);
  CHECK(center(d16).order() == 2);
  // wreath member: center order 2^n
  CHECK(center(make_family(Family::wreath, 2)).order() == 4);
  CHECK(center(make_family(Family::wreath, 3)).order() == 8);
  // SL2 has a unique involution (the central -I)
  PermGroup sl25 = make_family(Family::sl2, 5);
  int invs = 0;
  for (const auto& e : sl25.elements(200))
    if (e.order() == 2) ++invs;
  CHECK(invs == 1);
  CHECK(center(sl25).order() == 2);
}

TEST_CASE("matrix action is a homomorphism") {
  const u64 q = 5;
  const GF& f = GF::get(q);
  std::array<u64, 4> a{2, 1, 1, 1}, b{1, 3, 0, 1};
  std::array<u64, 4> ab{
      f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])),
      f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
      f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])),
      f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3]))};
  // v -> Mv acting on the left composes right-to-left; permutation
  // product applies the left factor first
  CHECK(matrix_on_vectors(q, ab) ==
        matrix_on_vectors(q, b) * matrix_on_vectors(q, a));
  CHECK(matrix_on_vectors(q, {1, 0, 0, 1}).is_identity());
}

TEST_CASE("closed forms hold for every supported SL2 parameter") {
  for (u64 q : {5, 9, 11, 13}) {
    OracleReport rep = sl2_closed_form(q);
    CHECK(rep.all_pass());
    for (const auto& l : rep.lines) {
      INFO("sl2 q=", q, " item ", l.item, ": ", l.detail);
      CHECK(l.pass);
    }
  }
}

TEST_CASE("SL(2,7) closed form, including the five-term identities") {
  OracleReport rep = sl2_closed_form(7);
  CHECK(rep.all_pass());
  bool saw_even = false;
  for (const auto& l : rep.lines)
    if (l.item.find("even") != std::string::npos &&
        l.detail.find("0 characters") == std::string::npos)
      saw_even = true;
  CHECK(saw_even);
}

TEST_CASE("SL(2,5): the principal identity has coefficient exactly 1") {
  OracleReport rep = sl2_closed_form(5);
  bool found = false;
  for (const auto& l : rep.lines)
    if (l.item == "psi1 identity") {
      CHECK(l.pass);
      CHECK(l.detail.find("coefficient 1") != std::string::npos);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("GL2 closed forms, including the degenerate q = 5 case") {
  OracleReport r5 = gl2_closed_form(5);
  CHECK(r5.all_pass());
  // q = 5: one of the two even-parameter coefficients is zero
  bool degenerate = false;
  for (const auto& l : r5.lines)
    if (l.item.find("even") != std::string::npos &&
        l.detail.find("coefficients 0") != std::string::npos)
      degenerate = true;
  CHECK(degenerate);

  OracleReport r7 = gl2_closed_form(7);
  CHECK(r7.all_pass());
  for (const auto& l : r7.lines) {
    INFO("gl2 q=7 item ", l.item, ": ", l.detail);
    CHECK(l.pass);
  }
}

TEST_CASE("closed-form oracles reject unsupported parameters") {
  CHECK_THROWS_AS(sl2_closed_form(3), UnsupportedParameter);
  CHECK_THROWS_AS(gl2_closed_form(9), UnsupportedParameter);
}

TEST_CASE("every covered character also passes the generic strong checker") {
  for (u64 q : {5}) {
    PermGroup g = make_family(Family::sl2, q);
    for (const auto& v : check_group(g, 2, CheckMode::both, "sl2")) {
      CHECK((v.status == CheckStatus::trivial_strong ||
             v.status == CheckStatus::strong));
    }
    PermGroup h = make_family(Family::gl2, q);
    for (const auto& v : check_group(h, 2, CheckMode::both, "gl2")) {
      CHECK((v.status == CheckStatus::trivial_strong ||
             v.status == CheckStatus::strong));
    }
  }
}

TEST_CASE("PSL2 agrees with the SL2 quotient route") {
  PermGroup sl25 = make_family(Family::sl2, 5);
  PermGroup psl25 = make_family(Family::psl2, 5);
  auto act = coset_action(sl25, center(sl25));
  CHECK(act.image.order() == psl25.order());
  // same character degrees
  auto da = character_table(act.image).degrees;
  auto db = character_table(psl25).degrees;
  CHECK(da == db);
  // the strong form carries to the quotient
  CHECK(quotient_metamorphic_check(sl25, center(sl25), 2));
}

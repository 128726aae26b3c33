#include "sylres/psub.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sylres/errors.hpp"

namespace sylres {

PermGroup sylow_subgroup(const PermGroup& g, u64 p) {
  if (!is_prime(p)) throw PreconditionViolated("p must be prime");
  u64 n = g.order_u64(caps().element_cap);
  u64 target = p_part(n, p);
  if (target == 1) return PermGroup::trivial(g.degree());

  auto p_element_part = [&](const Permutation& x) {
    u64 o = x.order();
    u64 op = p_part(o, p);
    return x.power((long long)(o / op));  // element of order op
  };

  // seed with a cyclic p-subgroup
  PermGroup p_sub;
  for (const auto& x : g.elements(caps().element_cap)) {
    Permutation z = p_element_part(x);
    if (!z.is_identity()) {
      p_sub = subgroup(g, {z});
      break;
    }
  }
  while (p_sub.order_u64(target) < target) {
    PermGroup norm = normalizer(g, p_sub);
    bool extended = false;
    for (const auto& x : norm.elements(caps().element_cap)) {
      Permutation z = p_element_part(x);
      if (z.is_identity() || p_sub.contains(z)) continue;
      auto gens = p_sub.generators();
      gens.push_back(z);
      p_sub = subgroup(g, gens);
      extended = true;
      break;
    }
    if (!extended) throw Error("normalizer extension stalled");
  }
  return p_sub;
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g)) throw NotASubgroup("H is not a subgroup of G");
  std::vector<Permutation> norm_gens;
  std::vector<Permutation> members;
  for (const auto& x : g.elements(caps().element_cap)) {
    bool ok = true;
    for (const auto& s : h.generators())
      if (!h.contains(s.conjugate(x))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(x);
  }
  return subgroup(g, members);
}

namespace {

// canonical key of a subgroup: sorted one-based image vectors
using SetKey = std::vector<std::vector<long>>;

SetKey key_of(const std::vector<Permutation>& elems) {
  SetKey k;
  k.reserve(elems.size());
  for (const auto& e : elems) k.push_back(e.one_based());
  std::sort(k.begin(), k.end());
  return k;
}

SetKey conjugate_key(const SetKey& k, const Permutation& x, unsigned degree) {
  SetKey r;
  r.reserve(k.size());
  for (const auto& img : k) {
    Permutation e = Permutation::from_one_based(img);
    r.push_back(e.conjugate(x).one_based());
  }
  std::sort(r.begin(), r.end());
  (void)degree;
  return r;
}

// all maximal subgroups of the p-group H (index p), via the Frattini
// quotient: hyperplane preimages in H/Phi(H)
std::vector<PermGroup> maximal_subgroups(const PermGroup& h, u64 p) {
  // Phi(H) = closure of commutators and p-th powers of generators
  std::vector<Permutation> seeds;
  const auto& gens = h.generators();
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      Permutation comm = a.inverse() * b.inverse() * a * b;
      if (!comm.is_identity()) seeds.push_back(comm);
    }
    Permutation ap = a.power((long long)p);
    if (!ap.is_identity()) seeds.push_back(ap);
  }
  PermGroup phi = normal_closure(h, seeds);

  // vector coordinates in the elementary abelian quotient H/Phi(H):
  // greedily pick a basis of coset representatives and assign exponent
  // vectors by enumerating the box
  const auto& elems = h.elements(caps().element_cap);
  std::vector<Permutation> basis;
  {
    PermGroup span = phi;
    for (const auto& x : elems) {
      if (span.contains(x)) continue;
      basis.push_back(x);
      auto sg = span.generators();
      sg.push_back(x);
      span = subgroup(h, sg);
      if (span.order() == h.order()) break;
    }
  }
  const size_t r = basis.size();
  if (r == 0) return {};

  // coset -> vector map: enumerate all p^r exponent combinations
  std::map<SetKey, std::vector<unsigned>> coset_vec;
  {
    std::vector<unsigned> exps(r, 0);
    const auto& phi_elems = phi.elements(caps().element_cap);
    while (true) {
      Permutation rep = Permutation::identity(h.degree());
      for (size_t i = 0; i < r; ++i)
        rep = rep * basis[i].power((long long)exps[i]);
      // key the coset rep*Phi by its sorted element images
      std::vector<Permutation> coset;
      coset.reserve(phi_elems.size());
      for (const auto& f : phi_elems) coset.push_back(rep * f);
      coset_vec.emplace(key_of(coset), exps);
      size_t i = 0;
      while (i < r && ++exps[i] == p) exps[i++] = 0;
      if (i == r) break;
    }
  }
  auto vec_of = [&](const Permutation& x) {
    const auto& phi_elems = phi.elements(caps().element_cap);
    std::vector<Permutation> coset;
    coset.reserve(phi_elems.size());
    for (const auto& f : phi_elems) coset.push_back(x * f);
    return coset_vec.at(key_of(coset));
  };

  // hyperplanes = kernels of nonzero functionals up to scalar: normalize
  // the leading nonzero coefficient to 1
  std::vector<PermGroup> out;
  std::vector<unsigned> func(r, 0);
  auto next_func = [&]() {
    size_t i = 0;
    while (i < r && ++func[i] == unsigned(p)) func[i++] = 0;
    return i < r;
  };
  while (next_func()) {
    size_t lead = r;
    for (size_t i = r; i-- > 0;)
      if (func[i]) lead = i;
    if (func[lead] != 1) continue;  // scalar-normalized representatives only
    std::vector<Permutation> mg;
    for (const auto& x : elems) {
      auto v = vec_of(x);
      u64 dot = 0;
      for (size_t i = 0; i < r; ++i) dot += u64(func[i]) * v[i];
      if (dot % p == 0) mg.push_back(x);
    }
    out.push_back(subgroup(h, mg));
  }
  return out;
}

}  // namespace

std::vector<SubgroupRecord> subgroups_of_index(const PermGroup& p_grp,
                                               u64 index) {
  u64 n = p_grp.order_u64(caps().element_cap);
  auto fac = factorize(n);
  if (fac.size() > 1) throw NotAPGroup("group order has two prime divisors");
  if (index == 1)
    return {SubgroupRecord{p_grp, 1, 1}};
  u64 p = fac.empty() ? 2 : fac.begin()->first;
  if (n % index != 0 || p_part(index, p) != index)
    throw PreconditionViolated("index must be a p-power dividing the order");

  const auto& pgens = p_grp.generators();
  unsigned deg = p_grp.degree();

  // layered descent; at each layer keep one representative per P-class
  std::vector<PermGroup> layer{p_grp};
  for (u64 cur = 1; cur < index; cur *= p) {
    std::set<SetKey> seen;
    std::vector<PermGroup> next;
    for (const auto& h : layer) {
      for (auto& m : maximal_subgroups(h, p)) {
        SetKey k = key_of(m.elements(caps().element_cap));
        if (seen.count(k)) continue;
        // record the whole P-conjugacy orbit as seen
        std::vector<SetKey> orbit{k};
        std::set<SetKey> orb_set{k};
        for (size_t i = 0; i < orbit.size(); ++i)
          for (const auto& s : pgens) {
            SetKey ck = conjugate_key(orbit[i], s, deg);
            if (orb_set.insert(ck).second) orbit.push_back(ck);
          }
        for (auto& o : orbit) seen.insert(std::move(o));
        next.push_back(std::move(m));
      }
    }
    layer = std::move(next);
  }

  std::vector<SubgroupRecord> out;
  for (auto& q : layer) {
    SubgroupRecord rec;
    rec.index_in_parent = index;
    // orbit size of the element set under P-conjugation
    SetKey k = key_of(q.elements(caps().element_cap));
    std::vector<SetKey> orbit{k};
    std::set<SetKey> orb_set{k};
    for (size_t i = 0; i < orbit.size(); ++i)
      for (const auto& s : pgens) {
        SetKey ck = conjugate_key(orbit[i], s, deg);
        if (orb_set.insert(ck).second) orbit.push_back(ck);
      }
    rec.conjugacy_class_size = orbit.size();
    rec.subgroup = std::move(q);
    out.push_back(std::move(rec));
  }
  return out;
}

PermGroup o_upper_pprime(const PermGroup& g, u64 p) {
  auto cd = g.classes();
  std::vector<Permutation> seeds;
  for (size_t c = 0; c < cd->reps.size(); ++c) {
    u64 o = cd->rep_orders[c];
    u64 op = p_part(o, p);
    if (op == 1) continue;
    seeds.push_back(cd->reps[c].power((long long)(o / op)));
  }
  if (seeds.empty()) return PermGroup::trivial(g.degree());
  return normal_closure(g, seeds);
}

std::vector<PermGroup> normal_subgroups(const PermGroup& g) {
  auto cd = g.classes();
  const size_t k = cd->reps.size();
  if (k > caps().normal_class_cap)
    throw ClassCountExceeded("class count " + std::to_string(k) +
                             " exceeds the normal-subgroup gate of " +
                             std::to_string(caps().normal_class_cap));

  auto same = [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return false;
    for (const auto& s : a.generators())
      if (!b.contains(s)) return false;
    return true;
  };
  auto add_unique = [&](std::vector<PermGroup>& list, PermGroup n) {
    for (const auto& x : list)
      if (same(x, n)) return false;
    list.push_back(std::move(n));
    return true;
  };

  // atoms: normal closures of single classes; every normal subgroup is a
  // join of the atoms it contains, so join-closure is complete
  std::vector<PermGroup> out{PermGroup::trivial(g.degree())};
  std::vector<PermGroup> atoms;
  for (size_t c = 1; c < k; ++c)
    add_unique(atoms, normal_closure(g, {cd->reps[c]}));
  for (const auto& a : atoms) add_unique(out, a);
  for (size_t i = 0; i < out.size(); ++i)
    for (const auto& a : atoms) {
      if (out[i].order() % a.order() == 0 && a.is_subgroup_of(out[i]))
        continue;
      auto gens = out[i].generators();
      for (const auto& s : a.generators()) gens.push_back(s);
      add_unique(out, subgroup(g, gens));
    }
  std::sort(out.begin(), out.end(),
            [](const PermGroup& a, const PermGroup& b) {
              return a.order() < b.order();
            });
  return out;
}

PermGroup o_lower(const PermGroup& g, u64 p, Core which) {
  std::vector<Permutation> gens;
  for (const auto& n : normal_subgroups(g)) {
    u64 no = n.order_u64(caps().element_cap);
    bool keep = (which == Core::p_core) ? (p_part(no, p) == no)
                                        : (no % p != 0);
    if (!keep) continue;
    for (const auto& s : n.generators()) gens.push_back(s);
  }
  if (gens.empty()) return PermGroup::trivial(g.degree());
  return subgroup(g, gens);  // join of normal p-(or p'-)subgroups
}

bool is_p_solvable(const PermGroup& g, u64 p) {
  u64 n = g.order_u64(caps().element_cap);
  if (n == 1) return true;
  if (n % p != 0) return true;           // p'-group
  if (p_part(n, p) == n) return true;    // p-group

  auto cd = g.classes();
  // minimal proper nontrivial normal closure of a class, if any
  PermGroup best;
  for (size_t c = 1; c < cd->reps.size(); ++c) {
    PermGroup nc = normal_closure(g, {cd->reps[c]});
    if (nc.order() == g.order()) continue;
    if (!best.valid() || nc.order() < best.order()) best = nc;
  }
  if (!best.valid()) return false;  // simple, mixed order
  auto act = coset_action(g, best);
  return is_p_solvable(best, p) && is_p_solvable(act.image, p);
}

PermGroup center(const PermGroup& g) {
  std::vector<Permutation> z;
  for (const auto& x : g.elements(caps().element_cap)) {
    bool central = true;
    for (const auto& s : g.generators())
      if (!(x * s == s * x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return subgroup(g, z);
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> seeds;
  const auto& gens = g.generators();
  for (const auto& a : gens)
    for (const auto& b : gens) {
      Permutation c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) seeds.push_back(c);
    }
  if (seeds.empty()) return PermGroup::trivial(g.degree());
  return normal_closure(g, seeds);
}

}  // namespace sylres

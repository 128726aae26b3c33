#include "sylres/permgroup.hpp"

#include <algorithm>
#include <map>

#include "sylres/errors.hpp"

namespace sylres {

Caps& caps() {
  static Caps c;
  return c;
}

// ---------------------------------------------------------------- StabChain

StabChain::StabChain(unsigned degree) : degree_(degree), order_(1) {}

void StabChain::recompute_orbit(Level& lv) const {
  lv.orbit.assign(1, lv.base);
  lv.orbit_pos.assign(degree_, -1);
  lv.orbit_pos[lv.base] = 0;
  lv.transversal.assign(1, Permutation::identity(degree_));
  for (size_t i = 0; i < lv.orbit.size(); ++i) {
    for (const auto& s : lv.gens) {
      unsigned q = s(std::uint16_t(lv.orbit[i]));
      if (lv.orbit_pos[q] < 0) {
        lv.orbit_pos[q] = int(lv.orbit.size());
        lv.orbit.push_back(q);
        lv.transversal.push_back(lv.transversal[i] * s);
      }
    }
  }
}

std::pair<Permutation, unsigned> StabChain::strip(Permutation g,
                                                  unsigned from) const {
  for (unsigned i = from; i < levels_.size(); ++i) {
    unsigned p = g(std::uint16_t(levels_[i].base));
    int pos = levels_[i].orbit_pos[p];
    if (pos < 0) return {std::move(g), i};
    g = g * levels_[i].transversal[pos].inverse();
  }
  return {std::move(g), unsigned(levels_.size())};
}

// Sifts g starting at `start`. A surviving residue fixes the bases of all
// levels before its stop level, so it joins the generating set of every
// level from `start` through the stop level; those levels are re-closed.
bool StabChain::sift_in(unsigned start, const Permutation& g) {
  auto [r, lvl] = strip(g, start);
  if (r.is_identity()) return false;
  if (lvl == levels_.size()) {
    unsigned base = 0;
    while (r(std::uint16_t(base)) == base) ++base;
    Level lv;
    lv.base = base;
    levels_.push_back(std::move(lv));
  }
  for (unsigned j = start; j <= lvl; ++j) levels_[j].gens.push_back(r);
  for (unsigned j = start; j <= lvl; ++j) recompute_orbit(levels_[j]);
  for (int j = int(lvl); j >= int(start); --j) close_level(unsigned(j));
  return true;
}

// Checks every Schreier generator of the level. Residues are sifted in
// from level+1 onward, which only ever modifies deeper levels, so one
// pass over this level's (snapshot) orbit and generator list suffices.
void StabChain::close_level(unsigned level) {
  const size_t norb = levels_[level].orbit.size();
  const size_t ngen = levels_[level].gens.size();
  for (size_t oi = 0; oi < norb; ++oi) {
    for (size_t si = 0; si < ngen; ++si) {
      const Permutation s = levels_[level].gens[si];
      unsigned q = s(std::uint16_t(levels_[level].orbit[oi]));
      Permutation schreier =
          levels_[level].transversal[oi] * s *
          levels_[level].transversal[levels_[level].orbit_pos[q]].inverse();
      sift_in(level + 1, schreier);
    }
  }
}

void StabChain::add_generator(const Permutation& g) {
  if (g.degree() != degree_)
    throw MalformedPermutation("generator degree mismatch");
  if (sift_in(0, g)) recompute_order();
}

void StabChain::recompute_order() {
  order_ = 1;
  for (const auto& lv : levels_) order_ *= (unsigned long)lv.orbit.size();
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [r, lvl] = strip(g, 0);
  (void)lvl;
  return r.is_identity();
}

std::vector<Permutation> StabChain::enumerate() const {
  std::vector<Permutation> acc{Permutation::identity(degree_)};
  for (int i = int(levels_.size()) - 1; i >= 0; --i) {
    std::vector<Permutation> next;
    next.reserve(acc.size() * levels_[i].orbit.size());
    for (const auto& h : acc)
      for (const auto& u : levels_[i].transversal) next.push_back(h * u);
    acc = std::move(next);
  }
  return acc;
}

// ---------------------------------------------------------------- PermGroup

struct PermGroup::Impl {
  unsigned degree = 0;
  std::vector<Permutation> gens;
  StabChain chain{0};
  mutable std::mutex mu;
  mutable std::shared_ptr<const std::vector<Permutation>> elems;
  mutable std::shared_ptr<const ClassData> classdata;
};

PermGroup PermGroup::from_generators(unsigned degree,
                                     std::vector<Permutation> gens) {
  // the degree cap is enforced at the ingestion boundaries (group files,
  // family constructors), not here: quotient images may exceed it
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->chain = StabChain(degree);
  for (const auto& g : gens) {
    if (g.degree() != degree)
      throw MalformedPermutation("generator degree mismatch");
    impl->chain.add_generator(g);
  }
  impl->gens = std::move(gens);
  PermGroup g;
  g.impl_ = std::move(impl);
  return g;
}

PermGroup PermGroup::trivial(unsigned degree) {
  return from_generators(degree, {});
}

unsigned PermGroup::degree() const { return impl_->degree; }

const std::vector<Permutation>& PermGroup::generators() const {
  return impl_->gens;
}

const mpz_class& PermGroup::order() const { return impl_->chain.order(); }

u64 PermGroup::order_u64(u64 cap) const {
  if (cap == 0) cap = caps().element_cap;
  const mpz_class& o = impl_->chain.order();
  if (o > mpz_class(static_cast<unsigned long>(cap)))
    throw CapExceeded(o.fits_ulong_p() ? o.get_ui() : u64(-1), cap);
  return o.get_ui();
}

bool PermGroup::contains(const Permutation& g) const {
  return impl_->chain.contains(g);
}

const std::vector<Permutation>& PermGroup::elements(u64 cap) const {
  if (cap == 0) cap = caps().element_cap;
  order_u64(cap);
  std::lock_guard lock(impl_->mu);
  if (!impl_->elems)
    impl_->elems = std::make_shared<const std::vector<Permutation>>(
        impl_->chain.enumerate());
  return *impl_->elems;
}

std::shared_ptr<const ClassData> PermGroup::classes(u64 cap,
                                                    unsigned class_cap) const {
  if (cap == 0) cap = caps().element_cap;
  if (class_cap == 0) class_cap = caps().class_cap;
  const auto& elems = elements(cap);
  std::lock_guard lock(impl_->mu);
  if (impl_->classdata) return impl_->classdata;

  auto cd = std::make_shared<ClassData>();
  cd->degree = impl_->degree;
  cd->order = elems.size();
  cd->class_index.reserve(elems.size() * 2);
  std::unordered_map<Permutation, int, PermHash> seen;
  seen.reserve(elems.size() * 2);
  for (const auto& e : elems) seen.emplace(e, -1);

  struct RawClass {
    Permutation rep;
    std::vector<Permutation> members;
  };
  std::vector<RawClass> raw;
  for (const auto& e : elems) {
    if (seen.at(e) >= 0) continue;
    RawClass rc;
    rc.members.push_back(e);
    seen[e] = int(raw.size());
    for (size_t i = 0; i < rc.members.size(); ++i) {
      for (const auto& s : impl_->gens) {
        Permutation c = rc.members[i].conjugate(s);
        auto it = seen.find(c);
        if (it->second < 0) {
          it->second = int(raw.size());
          rc.members.push_back(std::move(c));
        }
      }
    }
    rc.rep = *std::min_element(rc.members.begin(), rc.members.end(),
                               CanonicalPermLess{});
    raw.push_back(std::move(rc));
  }
  if (raw.size() > class_cap) throw CapExceeded(raw.size(), class_cap);

  std::vector<int> idx(raw.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return CanonicalPermLess{}(raw[a].rep, raw[b].rep);
  });
  for (int i : idx) {
    int cls = int(cd->reps.size());
    cd->reps.push_back(raw[i].rep);
    cd->sizes.push_back(raw[i].members.size());
    cd->rep_orders.push_back(raw[i].rep.order());
    for (const auto& m : raw[i].members) cd->class_index.emplace(m, cls);
  }
  impl_->classdata = cd;
  return cd;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree() != g.degree()) return false;
  for (const auto& x : generators())
    if (!g.contains(x)) return false;
  return true;
}

bool PermGroup::is_abelian() const {
  const auto& gs = generators();
  for (size_t i = 0; i < gs.size(); ++i)
    for (size_t j = i + 1; j < gs.size(); ++j)
      if (!(gs[i] * gs[j] == gs[j] * gs[i])) return false;
  return true;
}

// ---------------------------------------------------------------- ClassData

int ClassData::class_of(const Permutation& g) const {
  auto it = class_index.find(g);
  if (it == class_index.end()) throw NotAMember("element not in group");
  return it->second;
}

int ClassData::power_class(int cls, long long m) const {
  return class_of(reps[cls].power(m));
}

std::vector<int> ClassData::power_map(long long m) const {
  std::vector<int> pm(reps.size());
  for (size_t i = 0; i < reps.size(); ++i) pm[i] = power_class(int(i), m);
  return pm;
}

u64 ClassData::exponent() const {
  u64 e = 1;
  for (u64 o : rep_orders) e = lcm_u64(e, o);
  return e;
}

// ---------------------------------------------------------------- free ops

u64 centralizer_order(const PermGroup& g, const Permutation& x) {
  auto cd = g.classes();
  return cd->order / cd->sizes[cd->class_of(x)];
}

std::vector<Permutation> coset_representatives(const PermGroup& g,
                                               const PermGroup& h) {
  if (!h.is_subgroup_of(g)) throw NotASubgroup("H is not a subgroup of G");
  mpz_class index = g.order() / h.order();
  if (index > caps().coset_degree_cap)
    throw CapExceeded(index.fits_ulong_p() ? index.get_ui() : u64(-1),
                      caps().coset_degree_cap);
  std::vector<Permutation> reps{Permutation::identity(g.degree())};
  auto find_coset = [&](const Permutation& x) -> int {
    for (size_t i = 0; i < reps.size(); ++i)
      if (h.contains(x * reps[i].inverse())) return int(i);
    return -1;
  };
  for (size_t i = 0; i < reps.size(); ++i) {
    for (const auto& s : g.generators()) {
      Permutation x = reps[i] * s;
      if (find_coset(x) < 0) reps.push_back(std::move(x));
    }
  }
  return reps;
}

CosetActionResult coset_action(const PermGroup& g, const PermGroup& h) {
  auto reps = coset_representatives(g, h);
  const unsigned index = unsigned(reps.size());
  auto find_coset = [&](const Permutation& x) -> int {
    for (size_t i = 0; i < reps.size(); ++i)
      if (h.contains(x * reps[i].inverse())) return int(i);
    throw NotAMember("coset identification failed");
  };
  std::vector<Permutation> image_gens;
  for (const auto& s : g.generators()) {
    std::vector<std::uint16_t> img(index);
    for (unsigned i = 0; i < index; ++i)
      img[i] = std::uint16_t(find_coset(reps[i] * s));
    image_gens.emplace_back(std::move(img));
  }
  PermGroup image = PermGroup::from_generators(index, image_gens);

  // kernel = core of H: elements conjugating into H along every coset rep
  std::vector<Permutation> kernel_elems;
  for (const auto& x : g.elements(caps().element_cap)) {
    bool in_core = true;
    for (const auto& r : reps) {
      if (!h.contains(r * x * r.inverse())) {
        in_core = false;
        break;
      }
    }
    if (in_core) kernel_elems.push_back(x);
  }
  PermGroup kernel = subgroup(g, kernel_elems);
  return {std::move(image), std::move(kernel), std::move(image_gens)};
}

Permutation coset_image(const PermGroup& g, const PermGroup& h,
                        const std::vector<Permutation>& coset_reps,
                        const Permutation& x) {
  (void)g;
  auto find_coset = [&](const Permutation& y) -> int {
    for (size_t i = 0; i < coset_reps.size(); ++i)
      if (h.contains(y * coset_reps[i].inverse())) return int(i);
    throw NotAMember("coset identification failed");
  };
  std::vector<std::uint16_t> img(coset_reps.size());
  for (size_t i = 0; i < coset_reps.size(); ++i)
    img[i] = std::uint16_t(find_coset(coset_reps[i] * x));
  return Permutation(std::move(img));
}

PermGroup subgroup(const PermGroup& g, const std::vector<Permutation>& gens) {
  for (const auto& x : gens)
    if (!g.contains(x)) throw NotAMember("generator not in parent group");
  // drop elements already generated, to keep generating sets small
  StabChain chain(g.degree());
  std::vector<Permutation> kept;
  for (const auto& x : gens) {
    if (!chain.contains(x)) {
      chain.add_generator(x);
      kept.push_back(x);
    }
  }
  return PermGroup::from_generators(g.degree(), kept);
}

PermGroup normal_closure(const PermGroup& g,
                         const std::vector<Permutation>& seeds) {
  for (const auto& x : seeds)
    if (!g.contains(x)) throw NotAMember("seed not in group");
  StabChain chain(g.degree());
  std::vector<Permutation> gens;
  std::vector<Permutation> queue = seeds;
  while (!queue.empty()) {
    Permutation x = queue.back();
    queue.pop_back();
    if (chain.contains(x)) continue;
    chain.add_generator(x);
    gens.push_back(x);
    for (const auto& s : g.generators()) queue.push_back(x.conjugate(s));
  }
  return PermGroup::from_generators(g.degree(), gens);
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw GroupMismatch("degree mismatch");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  std::vector<Permutation> common;
  for (const auto& x : small.elements(caps().element_cap))
    if (large.contains(x)) common.push_back(x);
  return subgroup(small, common);
}

}  // namespace sylres

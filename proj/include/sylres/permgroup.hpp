#pragma once

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "sylres/caps.hpp"
#include "sylres/perm.hpp"

namespace sylres {

// Stabilizer chain (Schreier-Sims) with incremental generator insertion.
class StabChain {
 public:
  explicit StabChain(unsigned degree);

  void add_generator(const Permutation& g);
  bool contains(const Permutation& g) const;
  const mpz_class& order() const { return order_; }
  unsigned degree() const { return degree_; }

  // all group elements as transversal products; caller checks the cap
  std::vector<Permutation> enumerate() const;

 private:
  struct Level {
    unsigned base;
    std::vector<unsigned> orbit;  // discovery order, orbit[0] == base
    std::vector<int> orbit_pos;   // point -> index in orbit, -1 outside
    std::vector<Permutation> transversal;  // by orbit index, u(base) == point
    std::vector<Permutation> gens;
  };

  bool sift_in(unsigned start, const Permutation& g);
  void close_level(unsigned level);
  void recompute_orbit(Level& lv) const;
  // sifts g through levels >= from; returns (residue, stop level)
  std::pair<Permutation, unsigned> strip(Permutation g, unsigned from) const;
  void recompute_order();

  unsigned degree_;
  std::vector<Level> levels_;
  mpz_class order_;
};

struct ClassData;

// Immutable permutation group value. Copies share state; the lazy caches
// (element list, class data) are mutex-guarded.
class PermGroup {
 public:
  PermGroup() = default;  // empty handle; use from_generators / trivial

  static PermGroup from_generators(unsigned degree,
                                   std::vector<Permutation> gens);
  static PermGroup trivial(unsigned degree);

  bool valid() const { return impl_ != nullptr; }
  unsigned degree() const;
  const std::vector<Permutation>& generators() const;
  const mpz_class& order() const;
  u64 order_u64(u64 cap) const;  // throws CapExceeded if order > cap
  bool contains(const Permutation& g) const;
  bool is_trivial() const { return order() == 1; }

  const std::vector<Permutation>& elements(u64 cap) const;
  std::shared_ptr<const ClassData> classes(u64 cap = 0,
                                           unsigned class_cap = 0) const;

  bool is_subgroup_of(const PermGroup& g) const;
  bool is_abelian() const;

  // identity of the underlying state, used for group tags
  const void* id() const { return impl_.get(); }

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// Conjugacy class data with canonical representatives and power maps.
// Holds no reference back to the owning group; the pointer identity of the
// shared ClassData serves as the group tag for class functions.
struct ClassData {
  unsigned degree = 0;
  u64 order = 0;
  std::vector<Permutation> reps;
  std::vector<u64> sizes;
  std::vector<u64> rep_orders;
  std::unordered_map<Permutation, int, PermHash> class_index;

  int class_of(const Permutation& g) const;
  int power_class(int cls, long long m) const;
  std::vector<int> power_map(long long m) const;
  u64 exponent() const;
  int identity_class() const { return 0; }
  int inverse_class(int cls) const { return power_class(cls, -1); }
};

u64 centralizer_order(const PermGroup& g, const Permutation& x);

struct CosetActionResult {
  PermGroup image;
  PermGroup kernel;
  std::vector<Permutation> image_gens;  // one per generator of G
};

CosetActionResult coset_action(const PermGroup& g, const PermGroup& h);

PermGroup normal_closure(const PermGroup& g,
                         const std::vector<Permutation>& seeds);

// subgroup generated by a set of elements of g (degree taken from g)
PermGroup subgroup(const PermGroup& g, const std::vector<Permutation>& gens);

PermGroup intersection(const PermGroup& a, const PermGroup& b);

// maps a permutation of G through the coset action hom; act must come from
// coset_action(g, h)
Permutation coset_image(const PermGroup& g, const PermGroup& h,
                        const std::vector<Permutation>& coset_reps,
                        const Permutation& x);

std::vector<Permutation> coset_representatives(const PermGroup& g,
                                               const PermGroup& h);

}  // namespace sylres

#pragma once

#include "sylres/numth.hpp"

namespace sylres {

// Desk-scale resource limits. All configurable; the defaults cover the
// bundled corpus with room to spare.
struct Caps {
  u64 element_cap = 200000;       // max group order for enumeration
  unsigned degree_cap = 256;      // max permutation degree at construction
  unsigned coset_degree_cap = 1024;  // max index for coset actions
  unsigned class_cap = 128;       // max conjugacy class count for tables
  unsigned normal_class_cap = 24;  // class gate for normal-subgroup scans
  u64 node_budget = 10000000;     // strong-solver search nodes
  u64 prime_bound = 100000000;    // Dixon prime search bound
};

Caps& caps();

}  // namespace sylres

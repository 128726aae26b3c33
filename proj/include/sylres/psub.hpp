#pragma once

#include "sylres/permgroup.hpp"

namespace sylres {

struct SubgroupRecord {
  PermGroup subgroup;
  u64 index_in_parent = 1;
  u64 conjugacy_class_size = 1;
};

// Sylow p-subgroup by normalizer extension
PermGroup sylow_subgroup(const PermGroup& g, u64 p);

// all subgroups of the p-group P of the given index, one representative
// per P-conjugacy class, by layered descent through maximal subgroups
std::vector<SubgroupRecord> subgroups_of_index(const PermGroup& p_grp,
                                               u64 index);

// O^{p'}(G): normal closure of all p-elements
PermGroup o_upper_pprime(const PermGroup& g, u64 p);

enum class Core { p_core, p_prime_core };

// O_p(G) / O_{p'}(G): join of the normal subgroups of the stated kind
PermGroup o_lower(const PermGroup& g, u64 p, Core which);

bool is_p_solvable(const PermGroup& g, u64 p);

// all normal subgroups via join-closure of class closures; gated by a
// class-count cap (ClassCountExceeded)
std::vector<PermGroup> normal_subgroups(const PermGroup& g);

PermGroup center(const PermGroup& g);
PermGroup derived_subgroup(const PermGroup& g);
PermGroup normalizer(const PermGroup& g, const PermGroup& h);

}  // namespace sylres

#pragma once

#include <optional>
#include <string>

#include "sylres/chartab.hpp"
#include "sylres/psub.hpp"
#include "sylres/solver.hpp"

namespace sylres {

enum class CheckMode { weak, strong, both };

enum class CheckStatus { trivial_strong, strong, weak_only, fails, capped };

struct LinearWitness {
  int q_class_index = 0;   // index into the subgroup record list
  int lambda_index = 0;    // index into Irr(Q)
  mpz_class coefficient;
};

struct CheckVerdict {
  std::string group_name;
  u64 p = 2;
  int char_index = 0;
  u64 degree = 1;
  u64 degree_p_part = 1;   // chi(1)_p
  u64 target_index = 1;    // |P:Q| for admissible Q
  size_t subgroup_class_count = 0;
  size_t column_count = 0;
  SolveVerdict weak;
  SolveVerdict strong;
  // per-column merged origins (subgroup class index, lambda index), aligned
  // with the witness vectors
  std::vector<std::vector<std::pair<int, int>>> column_provenance;
  CheckStatus status = CheckStatus::fails;
  std::optional<LinearWitness> linear_witness;
  std::string note;
  double seconds = 0.0;
};

const char* status_name(CheckStatus s);

// one verdict per irreducible, canonical table order; empty when p does
// not divide |G|
std::vector<CheckVerdict> check_group(const PermGroup& g, u64 p,
                                      CheckMode mode,
                                      const std::string& name = "");

CheckVerdict check_character(const PermGroup& g, u64 p, int chi_index,
                             CheckMode mode);

// Mackey variant: arbitrary p-subgroup P' <= G, target |Q| = |G|_p/chi(1)_p
CheckVerdict check_p_subgroup(const PermGroup& g, u64 p,
                              const PermGroup& p_sub, int chi_index,
                              CheckMode mode);

// per defect-zero character: (char index, vanishes on all p-singular classes)
std::vector<std::pair<int, bool>> brauer_nesbitt_check(const PermGroup& g,
                                                       u64 p);

struct WildeViolation {
  int class_index;
  int char_index;
};
std::vector<WildeViolation> wilde_vanishing_check(const PermGroup& g, u64 p);

struct CyclicSylowResult {
  int char_index;
  bool vanishes_outside_q;
  bool induction_identity;
};
std::vector<CyclicSylowResult> cyclic_sylow_check(const PermGroup& g, u64 p);

struct FilterReport {
  bool evaluated = false;
  bool equals_o_upper_pprime = false;         // (a)
  bool directly_indecomposable = false;       // (b)
  bool chi_faithful = false;                  // (d)
  bool abelian_normals_cyclic_central = false;  // (e)
  bool o_pprime_in_center_and_derived = false;  // (f)
  mpz_class center_index;
  mpz_class order;
  std::string note;
};
FilterReport mincounter_filter(const PermGroup& g, u64 p, int chi_index);

// asserts the strong form carries to the quotient by the normal subgroup
bool quotient_metamorphic_check(const PermGroup& g, const PermGroup& n,
                                u64 p);

}  // namespace sylres

#pragma once

#include <string>
#include <utility>

#include "sylres/numth.hpp"
#include "sylres/snf.hpp"

namespace sylres {

// Feasibility instance: does the target lie in the (integer / nonnegative
// integer) span of the columns?
struct DecompositionInstance {
  IntMat columns;             // columns[c][j]: multiplicity of row j
  IntVec target;              // length = row count
  std::vector<u64> row_degrees;  // degree of the j-th irreducible
  // merged origins per column: (subgroup class index, lambda index)
  std::vector<std::vector<std::pair<int, int>>> provenance;

  size_t row_count() const { return target.size(); }
  size_t col_count() const { return columns.size(); }
};

enum class SolveStatus { feasible, infeasible, capped };

struct SolveVerdict {
  SolveStatus status = SolveStatus::infeasible;
  IntVec witness;  // present iff feasible; A * witness = target
  u64 search_nodes = 0;
  std::string certificate;  // human-readable infeasibility reason
};

SolveVerdict weak_solve(const DecompositionInstance& inst);
SolveVerdict strong_solve(const DecompositionInstance& inst);

// true iff A * a = target exactly (and a >= 0 when strong is requested)
bool verify_witness(const DecompositionInstance& inst, const IntVec& a,
                    bool strong);

std::string instance_to_json(const DecompositionInstance& inst,
                             const SolveVerdict& weak,
                             const SolveVerdict& strong);

}  // namespace sylres

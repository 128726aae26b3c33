#include "sylres/solver.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "sylres/caps.hpp"
#include "sylres/errors.hpp"

namespace sylres {

SolveVerdict weak_solve(const DecompositionInstance& inst) {
  const size_t rows = inst.row_count(), cols = inst.col_count();
  SolveVerdict out;
  // matrix with columns as given: A[j][c]
  IntMat a(rows, IntVec(cols, 0));
  for (size_t c = 0; c < cols; ++c)
    for (size_t j = 0; j < rows; ++j) a[j][c] = inst.columns[c][j];
  SNFResult snf = smith_normal_form(a);
  IntVec ut = mat_vec_mul(snf.u, inst.target);
  IntVec y(cols, 0);
  for (size_t i = 0; i < rows; ++i) {
    if (i < snf.rank) {
      if (ut[i] % snf.s[i][i] != 0) {
        out.status = SolveStatus::infeasible;
        out.certificate = "diagonal entry " + snf.s[i][i].get_str() +
                          " does not divide transformed target row " +
                          std::to_string(i);
        return out;
      }
      y[i] = ut[i] / snf.s[i][i];
    } else if (ut[i] != 0) {
      out.status = SolveStatus::infeasible;
      out.certificate =
          "transformed target is nonzero beyond rank at row " +
          std::to_string(i);
      return out;
    }
  }
  out.status = SolveStatus::feasible;
  out.witness = mat_vec_mul(snf.v, y);
  if (!verify_witness(inst, out.witness, false))
    throw Error("weak witness failed the audit");
  return out;
}

SolveVerdict strong_solve(const DecompositionInstance& inst) {
  const size_t rows = inst.row_count(), cols = inst.col_count();
  SolveVerdict out;
  if (inst.row_degrees.size() != rows)
    throw DimensionMismatch("row degree vector length mismatch");
  for (u64 d : inst.row_degrees)
    if (d == 0) throw PreconditionViolated("row degrees must be positive");

  // forced-zero columns: a positive entry on a zero-target row
  std::vector<size_t> active;
  for (size_t c = 0; c < cols; ++c) {
    bool forced = false;
    bool zero_col = true;
    for (size_t j = 0; j < rows; ++j) {
      if (inst.columns[c][j] != 0) zero_col = false;
      if (inst.columns[c][j] > 0 && inst.target[j] == 0) forced = true;
    }
    if (!forced && !zero_col) active.push_back(c);
  }

  // degree contribution of each active column, and of the target
  auto contribution = [&](const IntVec& v) {
    mpz_class d = 0;
    for (size_t j = 0; j < rows; ++j)
      d += mpz_class((unsigned long)inst.row_degrees[j]) * v[j];
    return d;
  };
  std::vector<mpz_class> contrib(active.size());
  for (size_t i = 0; i < active.size(); ++i)
    contrib[i] = contribution(inst.columns[active[i]]);
  std::stable_sort(active.begin(), active.end(), [&](size_t a, size_t b) {
    return contribution(inst.columns[a]) > contribution(inst.columns[b]);
  });
  for (size_t i = 0; i < active.size(); ++i)
    contrib[i] = contribution(inst.columns[active[i]]);

  // suffix gcd of contributions for the coin-problem prune
  std::vector<mpz_class> suffix_gcd(active.size() + 1, 0);
  for (size_t i = active.size(); i-- > 0;)
    suffix_gcd[i] = gcd(suffix_gcd[i + 1], contrib[i]);

  IntVec residual = inst.target;
  mpz_class residual_deg = contribution(residual);
  IntVec coeff(active.size(), 0);
  u64 nodes = 0;
  bool capped = false;
  IntVec witness;

  auto dfs = [&](auto&& self, size_t idx) -> bool {
    if (++nodes > caps().node_budget) {
      capped = true;
      return false;
    }
    if (residual_deg == 0) {
      witness.assign(cols, 0);
      for (size_t i = 0; i < active.size(); ++i)
        witness[active[i]] = coeff[i];
      return true;
    }
    if (idx == active.size()) return false;
    if (residual_deg % suffix_gcd[idx] != 0) return false;
    const IntVec& col = inst.columns[active[idx]];
    mpz_class amax = -1;
    for (size_t j = 0; j < rows; ++j) {
      if (col[j] <= 0) continue;
      mpz_class b = residual[j] / col[j];
      if (amax < 0 || b < amax) amax = b;
    }
    for (mpz_class a = amax; a >= 0; --a) {
      for (size_t j = 0; j < rows; ++j) residual[j] -= a * col[j];
      residual_deg -= a * contrib[idx];
      coeff[idx] = a;
      if (self(self, idx + 1)) return true;
      for (size_t j = 0; j < rows; ++j) residual[j] += a * col[j];
      residual_deg += a * contrib[idx];
      coeff[idx] = 0;
      if (capped) return false;
    }
    return false;
  };

  bool ok = dfs(dfs, 0);
  out.search_nodes = nodes;
  if (capped) {
    out.status = SolveStatus::capped;
    out.certificate = "node budget exhausted";
    return out;
  }
  if (!ok) {
    out.status = SolveStatus::infeasible;
    out.certificate = "exhaustive search within bounds found no witness";
    return out;
  }
  out.status = SolveStatus::feasible;
  out.witness = std::move(witness);
  if (!verify_witness(inst, out.witness, true))
    throw Error("strong witness failed the audit");
  return out;
}

bool verify_witness(const DecompositionInstance& inst, const IntVec& a,
                    bool strong) {
  if (a.size() != inst.col_count())
    throw DimensionMismatch("witness length differs from column count");
  const size_t rows = inst.row_count();
  IntVec acc(rows, 0);
  for (size_t c = 0; c < a.size(); ++c) {
    if (strong && a[c] < 0) return false;
    if (a[c] == 0) continue;
    for (size_t j = 0; j < rows; ++j) acc[j] += a[c] * inst.columns[c][j];
  }
  return acc == inst.target;
}

static nlohmann::json verdict_json(const SolveVerdict& v) {
  nlohmann::json j;
  j["status"] = v.status == SolveStatus::feasible     ? "feasible"
                : v.status == SolveStatus::infeasible ? "infeasible"
                                                      : "capped";
  if (v.status == SolveStatus::feasible) {
    j["witness"] = nlohmann::json::array();
    for (const auto& x : v.witness) j["witness"].push_back(x.get_str());
  }
  if (!v.certificate.empty()) j["certificate"] = v.certificate;
  j["search_nodes"] = v.search_nodes;
  return j;
}

std::string instance_to_json(const DecompositionInstance& inst,
                             const SolveVerdict& weak,
                             const SolveVerdict& strong) {
  nlohmann::json j;
  j["columns"] = nlohmann::json::array();
  for (const auto& col : inst.columns) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& x : col) c.push_back(x.get_str());
    j["columns"].push_back(std::move(c));
  }
  j["target"] = nlohmann::json::array();
  for (const auto& x : inst.target) j["target"].push_back(x.get_str());
  j["row_degrees"] = inst.row_degrees;
  j["provenance"] = nlohmann::json::array();
  for (const auto& pv : inst.provenance) {
    nlohmann::json p = nlohmann::json::array();
    for (const auto& [q, l] : pv) p.push_back({q, l});
    j["provenance"].push_back(std::move(p));
  }
  j["weak"] = verdict_json(weak);
  j["strong"] = verdict_json(strong);
  return j.dump(2);
}

}  // namespace sylres

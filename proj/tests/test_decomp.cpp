#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "sylres/caps.hpp"
#include "sylres/errors.hpp"
#include "sylres/snf.hpp"
#include "sylres/solver.hpp"

using namespace sylres;

namespace {

DecompositionInstance make_instance(const IntMat& cols, const IntVec& target) {
  DecompositionInstance inst;
  inst.columns = cols;
  inst.target = target;
  inst.row_degrees.assign(target.size(), 1);
  inst.provenance.assign(cols.size(), {{0, 0}});
  return inst;
}

// oracle: exhaustive search over the bounding box. Coefficient c is at most
// min over rows r with col[r] > 0 of target[r] / col[r]; a column with no
// positive entry can only carry coefficient 0 (entries here are >= 0).
bool box_feasible(const IntMat& cols, const IntVec& target) {
  size_t rows = target.size(), n = cols.size();
  std::vector<long> bound(n, 0);
  for (size_t c = 0; c < n; ++c) {
    long b = -1;
    for (size_t r = 0; r < rows; ++r)
      if (cols[c][r] > 0) {
        long q = mpz_class(target[r] / cols[c][r]).get_si();
        b = b < 0 ? q : std::min(b, q);
      }
    bound[c] = b < 0 ? 0 : b;
  }
  IntVec residual = target;
  std::function<bool(size_t)> rec = [&](size_t c) -> bool {
    if (c == n) {
      for (const auto& x : residual)
        if (x != 0) return false;
      return true;
    }
    for (long a = 0; a <= bound[c]; ++a) {
      bool neg = false;
      for (size_t r = 0; r < rows && !neg; ++r)
        if (residual[r] - a * cols[c][r] < 0) neg = true;
      if (neg) break;
      for (size_t r = 0; r < rows; ++r) residual[r] -= a * cols[c][r];
      if (rec(c + 1)) return true;
      for (size_t r = 0; r < rows; ++r) residual[r] += a * cols[c][r];
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("smith normal form invariants on random matrices") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    size_t rows = 1 + rng() % 5, colc = 1 + rng() % 5;
    IntMat m(rows, IntVec(colc));
    for (auto& row : m)
      for (auto& x : row) x = long(rng() % 11) - 5;
    SNFResult s = smith_normal_form(m);
    CHECK(mat_mul(mat_mul(s.u, m), s.v) == s.s);
    mpz_class du = determinant(s.u), dv = determinant(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    mpz_class prev = 0;
    size_t nz = 0;
    for (size_t i = 0; i < std::min(rows, colc); ++i) {
      const mpz_class& d = s.s[i][i];
      CHECK(d >= 0);
      if (d != 0) {
        ++nz;
        if (prev != 0) CHECK(d % prev == 0);  // divisibility chain
        prev = d;
      }
      for (size_t j = 0; j < colc; ++j)
        if (j != i) CHECK(s.s[i][j] == 0);
    }
    CHECK(s.rank == nz);
  }
}

TEST_CASE("weak solver: hand-built certificates") {
  // 2a = 1 has no integer solution
  auto inst = make_instance({{2}}, {1});
  SolveVerdict v = weak_solve(inst);
  CHECK(v.status == SolveStatus::infeasible);
  CHECK(!v.certificate.empty());

  // 2a + 3b = 1 integrally but not nonnegatively
  inst = make_instance({{2}, {3}}, {1});
  v = weak_solve(inst);
  REQUIRE(v.status == SolveStatus::feasible);
  CHECK(verify_witness(inst, v.witness, false));
  CHECK(strong_solve(inst).status == SolveStatus::infeasible);

  // target outside the column space
  inst = make_instance({{1, 0}}, {0, 1});
  CHECK(weak_solve(inst).status == SolveStatus::infeasible);
  CHECK(strong_solve(inst).status == SolveStatus::infeasible);

  // empty column set, zero target
  inst = make_instance({}, {0, 0});
  CHECK(weak_solve(inst).status == SolveStatus::feasible);
  CHECK(strong_solve(inst).status == SolveStatus::feasible);
}

TEST_CASE("solver agrees with box enumeration on 200 seeded instances") {
  std::mt19937 rng(1234);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    size_t rows = 1 + rng() % 6, colc = 1 + rng() % 8;
    IntMat cols(colc, IntVec(rows));
    for (auto& col : cols)
      for (auto& x : col) x = long(rng() % 6);  // entries <= 5
    IntVec target(rows);
    for (auto& x : target) x = long(rng() % 21);  // entries <= 20
    auto inst = make_instance(cols, target);

    bool oracle = box_feasible(cols, target);
    SolveVerdict strong = strong_solve(inst);
    REQUIRE(strong.status != SolveStatus::capped);
    CHECK((strong.status == SolveStatus::feasible) == oracle);
    if (oracle) {
      ++feasible;
      CHECK(verify_witness(inst, strong.witness, true));
      // strong implies weak
      SolveVerdict weak = weak_solve(inst);
      CHECK(weak.status == SolveStatus::feasible);
      CHECK(verify_witness(inst, weak.witness, false));
    } else {
      ++infeasible;
    }
  }
  // the distribution exercises both outcomes
  CHECK(feasible >= 20);
  CHECK(infeasible >= 20);
}

TEST_CASE("weak witnesses verify on random integrally-feasible systems") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    size_t rows = 1 + rng() % 5, colc = 1 + rng() % 6;
    IntMat cols(colc, IntVec(rows));
    for (auto& col : cols)
      for (auto& x : col) x = long(rng() % 7) - 3;
    // build the target from a known integer combination
    IntVec known(colc), target(rows, 0);
    for (auto& a : known) a = long(rng() % 9) - 4;
    for (size_t c = 0; c < colc; ++c)
      for (size_t r = 0; r < rows; ++r) target[r] += known[c] * cols[c][r];
    auto inst = make_instance(cols, target);
    SolveVerdict v = weak_solve(inst);
    REQUIRE(v.status == SolveStatus::feasible);
    CHECK(verify_witness(inst, v.witness, false));
  }
}

TEST_CASE("verify_witness rejects wrong and negative witnesses") {
  auto inst = make_instance({{1, 0}, {0, 1}}, {2, 3});
  CHECK(verify_witness(inst, {2, 3}, true));
  CHECK(!verify_witness(inst, {3, 2}, true));
  CHECK_THROWS_AS(verify_witness(inst, {2}, true), DimensionMismatch);
  auto inst2 = make_instance({{1}, {3}}, {2});
  CHECK(verify_witness(inst2, {-1, 1}, false));
  CHECK(!verify_witness(inst2, {-1, 1}, true));
}

TEST_CASE("node budget produces a capped verdict, not a wrong answer") {
  u64 saved = caps().node_budget;
  caps().node_budget = 3;
  // many interchangeable columns force search
  IntMat cols(6, IntVec(3));
  std::mt19937 rng(31);
  for (auto& col : cols)
    for (auto& x : col) x = long(rng() % 4);
  IntVec target = {7, 9, 11};
  auto inst = make_instance(cols, target);
  SolveVerdict v = strong_solve(inst);
  CHECK(v.status == SolveStatus::capped);
  caps().node_budget = saved;
  SolveVerdict full = strong_solve(inst);
  CHECK(full.status != SolveStatus::capped);
  CHECK((full.status == SolveStatus::feasible) == box_feasible(cols, target));
}

TEST_CASE("instance serialization is stable") {
  auto inst = make_instance({{2}, {3}}, {1});
  auto w = weak_solve(inst);
  auto s = strong_solve(inst);
  CHECK(instance_to_json(inst, w, s) == instance_to_json(inst, w, s));
}

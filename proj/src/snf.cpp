#include "sylres/snf.hpp"

#include "sylres/errors.hpp"

namespace sylres {

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  IntMat r(n, IntVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j)
        if (b[l][j] != 0) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

IntVec mat_vec_mul(const IntMat& a, const IntVec& x) {
  IntVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (a[i][j] != 0 && x[j] != 0) r[i] += a[i][j] * x[j];
  return r;
}

mpz_class determinant(const IntMat& a) {
  size_t n = a.size();
  if (n == 0) return 1;
  IntMat m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num / prev;  // exact by Bareiss
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

struct Worker {
  IntMat s, u, v;
  size_t rows, cols;

  void row_swap(size_t a, size_t b) {
    std::swap(s[a], s[b]);
    std::swap(u[a], u[b]);
  }
  void col_swap(size_t a, size_t b) {
    for (auto& r : s) std::swap(r[a], r[b]);
    for (auto& r : v) std::swap(r[a], r[b]);
  }
  void row_add(size_t dst, size_t src, const mpz_class& f) {
    for (size_t j = 0; j < cols; ++j) s[dst][j] += f * s[src][j];
    for (size_t j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
  }
  void col_add(size_t dst, size_t src, const mpz_class& f) {
    for (size_t i = 0; i < rows; ++i) s[i][dst] += f * s[i][src];
    for (size_t i = 0; i < cols; ++i) v[i][dst] += f * v[i][src];
  }
  void row_negate(size_t a) {
    for (auto& x : s[a]) x = -x;
    for (auto& x : u[a]) x = -x;
  }
};

}  // namespace

SNFResult smith_normal_form(const IntMat& m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  Worker w;
  w.rows = rows;
  w.cols = cols;
  w.s = m;
  w.u.assign(rows, IntVec(rows, 0));
  for (size_t i = 0; i < rows; ++i) w.u[i][i] = 1;
  w.v.assign(cols, IntVec(cols, 0));
  for (size_t i = 0; i < cols; ++i) w.v[i][i] = 1;

  size_t t = 0;
  const size_t tmax = std::min(rows, cols);
  while (t < tmax) {
    // find a nonzero pivot of minimal absolute value in the submatrix
    size_t pi = rows, pj = cols;
    mpz_class best;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (w.s[i][j] == 0) continue;
        mpz_class a = abs(w.s[i][j]);
        if (pi == rows || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;  // submatrix is zero
    if (pi != t) w.row_swap(pi, t);
    if (pj != t) w.col_swap(pj, t);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < rows; ++i) {
        if (w.s[i][t] == 0) continue;
        mpz_class q = w.s[i][t] / w.s[t][t];  // truncated is fine
        if (q != 0) w.row_add(i, t, -q);
        if (w.s[i][t] != 0) {
          w.row_swap(i, t);  // strictly smaller remainder becomes pivot
          dirty = true;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (w.s[t][j] == 0) continue;
        mpz_class q = w.s[t][j] / w.s[t][t];
        if (q != 0) w.col_add(j, t, -q);
        if (w.s[t][j] != 0) {
          w.col_swap(j, t);
          dirty = true;
        }
      }
      if (dirty) continue;
      // enforce the divisibility chain: fold in any non-multiple entry
      for (size_t i = t + 1; i < rows && !dirty; ++i)
        for (size_t j = t + 1; j < cols && !dirty; ++j)
          if (w.s[i][j] % w.s[t][t] != 0) {
            w.row_add(t, i, 1);
            dirty = true;
          }
    }
    if (w.s[t][t] < 0) w.row_negate(t);
    ++t;
  }

  SNFResult r;
  r.s = std::move(w.s);
  r.u = std::move(w.u);
  r.v = std::move(w.v);
  r.rank = t;
  // audit
  IntMat check = mat_mul(mat_mul(r.u, m), r.v);
  if (check != r.s) throw Error("Smith normal form audit failed");
  for (size_t i = 0; i + 1 < r.rank; ++i)
    if (r.s[i + 1][i + 1] % r.s[i][i] != 0)
      throw Error("Smith divisibility chain violated");
  return r;
}

}  // namespace sylres

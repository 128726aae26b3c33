#include "sylres/chartab.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "sylres/errors.hpp"

namespace sylres {

namespace {

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

struct Fp {
  u64 ell;
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= ell ? s - ell : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + ell - b; }
  u64 mul(u64 a, u64 b) const { return a * b % ell; }
  u64 inv(u64 a) const { return mod_inv(a, ell); }
  u64 pow(u64 a, u64 e) const { return mod_pow(a, e, ell); }
};

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(Mat& a, const Fp& f) {
  std::vector<int> pivots;
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    u64 iv = f.inv(a[r][c]);
    for (size_t j = c; j < cols; ++j) a[r][j] = f.mul(a[r][j], iv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 m = a[i][c];
      for (size_t j = c; j < cols; ++j)
        a[i][j] = f.sub(a[i][j], f.mul(m, a[r][j]));
    }
    pivots.push_back(int(c));
    ++r;
  }
  a.resize(r);
  return pivots;
}

// nullspace basis (rows) of a, destroyed in the process
Mat nullspace(Mat a, const Fp& f) {
  size_t cols = a.empty() ? 0 : a[0].size();
  auto pivots = rref(a, f);
  std::vector<int> pivot_of_col(cols, -1);
  for (size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = int(i);
  Mat basis;
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Vec v(cols, 0);
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = f.sub(0, a[i][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// characteristic polynomial via Hessenberg reduction, ascending coeffs,
// monic of degree n
Vec char_poly(Mat h, const Fp& f) {
  size_t n = h.size();
  // similarity reduction to upper Hessenberg
  for (size_t c = 0; c + 2 < n; ++c) {
    size_t p = c + 1;
    while (p < n && h[p][c] == 0) ++p;
    if (p == n) continue;
    if (p != c + 1) {
      std::swap(h[p], h[c + 1]);
      for (size_t i = 0; i < n; ++i) std::swap(h[i][p], h[i][c + 1]);
    }
    u64 iv = f.inv(h[c + 1][c]);
    for (size_t r = c + 2; r < n; ++r) {
      if (h[r][c] == 0) continue;
      u64 m = f.mul(h[r][c], iv);
      for (size_t j = 0; j < n; ++j) h[r][j] = f.sub(h[r][j], f.mul(m, h[c + 1][j]));
      for (size_t i = 0; i < n; ++i) h[i][c + 1] = f.add(h[i][c + 1], f.mul(m, h[i][r]));
    }
  }
  // p_m(x) = (x - h[m-1][m-1]) p_{m-1}(x)
  //          - sum_{i<m-1} h[i][m-1] (prod_{j=i+1}^{m-1} h[j][j-1]) p_i(x)
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (size_t m = 1; m <= n; ++m) {
    Vec q(m + 1, 0);
    for (size_t t = 0; t < m; ++t) {
      q[t + 1] = f.add(q[t + 1], p[m - 1][t]);
      q[t] = f.sub(q[t], f.mul(h[m - 1][m - 1], p[m - 1][t]));
    }
    u64 beta = 1;
    for (size_t i = m - 1; i-- > 0;) {
      beta = f.mul(beta, h[i + 1][i]);
      if (beta == 0) break;
      u64 coef = f.mul(h[i][m - 1], beta);
      if (coef == 0) continue;
      for (size_t t = 0; t <= i; ++t) q[t] = f.sub(q[t], f.mul(coef, p[i][t]));
    }
    p[m] = std::move(q);
  }
  return p[n];
}

std::vector<u64> poly_roots(const Vec& poly, const Fp& f) {
  std::vector<u64> roots;
  for (u64 x = 0; x < f.ell; ++x) {
    u64 v = 0;
    for (size_t i = poly.size(); i-- > 0;) v = f.add(f.mul(v, x), poly[i]);
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

Vec mat_vec(const Mat& m, const Vec& v, const Fp& f) {
  Vec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    u64 acc = 0;
    for (size_t j = 0; j < v.size(); ++j)
      if (m[i][j] && v[j]) acc = f.add(acc, f.mul(m[i][j], v[j]));
    r[i] = acc;
  }
  return r;
}

}  // namespace

CharacterTable character_table(const PermGroup& g) {
  CharacterTable tab;
  tab.group = g;
  auto cd = g.classes();
  tab.cls = cd;
  const size_t k = cd->reps.size();
  const u64 n = cd->order;
  const u64 e = cd->exponent();
  tab.exponent = e;

  // Dixon prime: smallest l = 1 mod e with l*l > 4n (so l does not
  // divide |G| and integer data lifts uniquely from [0, l))
  u64 ell = 0;
  for (u64 cand = e + 1;; cand += e) {
    if (cand > caps().prime_bound)
      throw NoSuitablePrime("no usable prime below the configured bound");
    if (cand * cand > 4 * n && is_prime(cand)) {
      ell = cand;
      break;
    }
  }
  Fp f{ell};
  const u64 z = f.pow(primitive_root(ell), (ell - 1) / e);  // order e

  // class member lists
  std::vector<std::vector<const Permutation*>> members(k);
  for (size_t i = 0; i < k; ++i) members[i].reserve(cd->sizes[i]);
  const auto& elems = g.elements(caps().element_cap);
  for (const auto& x : elems) members[size_t(cd->class_of(x))].push_back(&x);

  // class-sum matrices, built on demand: (M_i)_{j,l} = a_{ijl}, so that
  // M_i v = omega_i v for v_j = |K_j| chi(g_j) / chi(1)
  std::vector<Mat> mcache(k);
  auto class_matrix = [&](size_t i) -> const Mat& {
    if (!mcache[i].empty()) return mcache[i];
    Mat m(k, Vec(k, 0));
    for (size_t l = 0; l < k; ++l) {
      const Permutation& zl = cd->reps[l];
      for (const Permutation* x : members[i]) {
        int j = cd->class_of(x->inverse() * zl);
        m[size_t(j)][l] = f.add(m[size_t(j)][l], 1);
      }
    }
    mcache[i] = std::move(m);
    return mcache[i];
  };

  // split the ambient space into common eigenspaces of all class-sum
  // matrices; each surviving line is an omega-vector of one irreducible
  std::vector<Mat> spaces;
  {
    Mat id(k, Vec(k, 0));
    for (size_t i = 0; i < k; ++i) id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  for (size_t i = 1; i < k; ++i) {
    bool any_big = false;
    for (const auto& s : spaces)
      if (s.size() > 1) any_big = true;
    if (!any_big) break;
    const Mat& mi = class_matrix(i);
    std::vector<Mat> next;
    for (auto& s : spaces) {
      size_t d = s.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // restricted action: M_i maps span(s) to itself; express images in
      // the rref basis of s
      Mat basis = s;
      auto pivots = rref(basis, f);
      if (basis.size() != d) throw Error("subspace basis is degenerate");
      Mat r(d, Vec(d, 0));
      for (size_t t = 0; t < d; ++t) {
        Vec img = mat_vec(mi, basis[t], f);
        Vec coord(d, 0);
        for (size_t b = 0; b < d; ++b) {
          u64 c0 = img[size_t(pivots[b])];
          coord[b] = c0;
          if (c0)
            for (size_t j = 0; j < k; ++j)
              img[j] = f.sub(img[j], f.mul(c0, basis[b][j]));
        }
        for (u64 v : img)
          if (v != 0) throw Error("class-sum matrix does not preserve subspace");
        for (size_t b = 0; b < d; ++b) r[t][b] = coord[b];
      }
      // columns of the restricted matrix in the basis: r as built maps
      // basis coords of s-rows; transpose so eigen problem is standard
      Mat rm(d, Vec(d, 0));
      for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b) rm[a][b] = r[b][a];
      auto poly = char_poly(rm, f);
      auto roots = poly_roots(poly, f);
      if (roots.size() <= 1) {
        // scalar action here; no split from this matrix
        next.push_back(std::move(basis));
        continue;
      }
      for (u64 root : roots) {
        Mat shifted = rm;
        for (size_t a = 0; a < d; ++a)
          shifted[a][a] = f.sub(shifted[a][a], root);
        Mat null = nullspace(std::move(shifted), f);
        Mat sub;
        for (const auto& coord : null) {
          Vec v(k, 0);
          for (size_t b = 0; b < d; ++b)
            if (coord[b])
              for (size_t j = 0; j < k; ++j)
                v[j] = f.add(v[j], f.mul(coord[b], basis[b][j]));
          sub.push_back(std::move(v));
        }
        if (!sub.empty()) next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw Error("eigenspace splitting incomplete");

  // per-line data: degree and chi-bar values
  std::vector<u64> inv_size(k);
  for (size_t j = 0; j < k; ++j) inv_size[j] = f.inv(cd->sizes[j] % ell);
  std::vector<int> inv_class(k);
  for (size_t j = 0; j < k; ++j) inv_class[j] = cd->inverse_class(int(j));

  struct Lifted {
    u64 degree;
    std::vector<Cyclotomic> values;
    Vec chibar;
  };
  std::vector<Lifted> lifted;
  lifted.reserve(k);

  for (auto& line : spaces) {
    Vec omega = line[0];
    if (omega[0] == 0) throw Error("omega vector vanishes at the identity");
    u64 scale = f.inv(omega[0]);
    for (auto& v : omega) v = f.mul(v, scale);
    // degree: d^2 = n / sum_l omega_l omega_{l*} / |K_l|
    u64 s = 0;
    for (size_t l = 0; l < k; ++l)
      s = f.add(s, f.mul(f.mul(omega[l], omega[size_t(inv_class[l])]),
                         inv_size[l]));
    auto [d, ok] = mod_sqrt(f.mul(n % ell, f.inv(s)), ell);
    if (!ok) throw Error("degree is not a square mod l");
    if (d > ell - d) d = ell - d;  // actual degree < sqrt(n) < l/2
    Vec chibar(k);
    for (size_t j = 0; j < k; ++j)
      chibar[j] = f.mul(f.mul(d, omega[j]), inv_size[j]);

    // lift each value via eigenvalue multiplicities over the cyclic group
    // generated by the class representative
    std::vector<Cyclotomic> vals(k);
    for (size_t j = 0; j < k; ++j) {
      u64 o = cd->rep_orders[j];
      if (o == 1) {
        vals[j] = Cyclotomic(long(chibar[j]));
        continue;
      }
      u64 zo = f.pow(z, e / o);
      u64 zo_inv = f.inv(zo);
      std::vector<u64> chain(o);
      for (u64 t = 0; t < o; ++t)
        chain[t] = chibar[size_t(cd->power_class(int(j), (long long)t))];
      u64 inv_o = f.inv(o % ell);
      Cyclotomic val;
      for (u64 u = 0; u < o; ++u) {
        u64 m = 0, w = 1;
        for (u64 t = 0; t < o; ++t) {
          m = f.add(m, f.mul(chain[t], w));
          w = f.mul(w, f.pow(zo_inv, u));
        }
        m = f.mul(m, inv_o);
        if (m >= ell) throw Error("multiplicity lift out of range");
        if (m)
          val = val + Cyclotomic::root_of_unity(o, (long long)u) *
                          mpq_class(long(m));
      }
      vals[j] = std::move(val);
    }
    lifted.push_back({d, std::move(vals), std::move(chibar)});
  }

  // verification: every lifted character, reduced mod l, must be a
  // simultaneous eigenvector of all class-sum matrices
  for (const auto& lc : lifted) {
    Vec w(k);
    u64 invd = f.inv(lc.degree % ell);
    for (size_t j = 0; j < k; ++j)
      w[j] = f.mul(f.mul(cd->sizes[j] % ell, lc.chibar[j]), invd);
    for (size_t i = 0; i < k; ++i) {
      const Mat& mi = class_matrix(i);
      Vec img = mat_vec(mi, w, f);
      for (size_t l = 0; l < k; ++l)
        if (img[l] != f.mul(w[i], w[l]))
          throw Error("lifted character fails the eigenvector check");
    }
    // consistency of the lift against chibar
    for (size_t j = 0; j < k; ++j) {
      u64 o = cd->rep_orders[j];
      auto coords = lc.values[j].coords_in(o == 1 ? 1 : o);
      // evaluate at zeta_o -> z^{e/o} mod l
      u64 zo = (o == 1) ? 1 : f.pow(z, e / o);
      u64 acc = 0, w2 = 1;
      for (const auto& c : coords) {
        mpz_class num = c.get_num() % (long)ell;
        if (num < 0) num += (long)ell;
        mpz_class den = c.get_den() % (long)ell;
        u64 cm = f.mul(num.get_ui(), f.inv(den.get_ui()));
        acc = f.add(acc, f.mul(cm, w2));
        w2 = f.mul(w2, zo);
      }
      if (acc % ell != lc.chibar[j])
        throw Error("lift disagrees with modular character");
    }
  }

  u64 degsum = 0;
  for (const auto& lc : lifted) degsum += lc.degree * lc.degree;
  if (degsum != n) throw Error("degree squares do not sum to the order");

  std::sort(lifted.begin(), lifted.end(),
            [](const Lifted& a, const Lifted& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              for (size_t j = 0; j < a.values.size(); ++j) {
                int c = a.values[j].cmp(b.values[j]);
                if (c != 0) return c < 0;
              }
              return false;
            });

  for (auto& lc : lifted) {
    ClassFunction cf;
    cf.cls = cd;
    cf.values = std::move(lc.values);
    tab.irr.push_back(std::move(cf));
    tab.degrees.push_back(lc.degree);
  }
  return tab;
}

void verify_table(const CharacterTable& t) {
  const auto& cd = *t.cls;
  size_t k = cd.reps.size();
  if (t.irr.size() != k) throw Error("table is not square");
  u64 degsum = 0;
  for (size_t i = 0; i < k; ++i) {
    if (t.degrees[i] == 0 || cd.order % t.degrees[i] != 0)
      throw Error("degree does not divide the group order");
    degsum += t.degrees[i] * t.degrees[i];
  }
  if (degsum != cd.order) throw Error("degree squares do not sum to order");
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j) {
      mpq_class ip = inner_product(t.irr[i], t.irr[j]);
      if (ip != (i == j ? 1 : 0)) throw Error("row orthogonality fails");
    }
  for (size_t a = 0; a < k; ++a)
    for (size_t b = a; b < k; ++b) {
      Cyclotomic acc;
      for (size_t i = 0; i < k; ++i)
        acc = acc + t.irr[i].values[a] * t.irr[i].values[b].conj();
      Cyclotomic expect = (a == b)
                              ? Cyclotomic(long(cd.order / cd.sizes[a]))
                              : Cyclotomic();
      if (!(acc == expect)) throw Error("column orthogonality fails");
    }
}

std::vector<mpz_class> decompose(const ClassFunction& theta,
                                 const CharacterTable& table) {
  if (theta.cls.get() != table.cls.get())
    throw GroupMismatch("class function does not live on the table's group");
  std::vector<mpz_class> m;
  m.reserve(table.irr.size());
  for (const auto& chi : table.irr) {
    mpq_class ip = inner_product(theta, chi);
    if (ip.get_den() != 1 || ip < 0)
      throw NotACharacter("multiplicity is negative or non-integral");
    m.push_back(ip.get_num());
  }
  // reconstruction check
  ClassFunction rec = combine(m, table);
  if (!(rec == theta)) throw NotACharacter("reconstruction mismatch");
  return m;
}

ClassFunction combine(const std::vector<mpz_class>& m,
                      const CharacterTable& table) {
  ClassFunction acc;
  acc.cls = table.cls;
  acc.values.assign(table.cls->reps.size(), Cyclotomic());
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    mpq_class s(m[i]);
    for (size_t j = 0; j < acc.values.size(); ++j)
      acc.values[j] = acc.values[j] + table.irr[i].values[j] * s;
  }
  return acc;
}

std::string table_to_json(const CharacterTable& t) {
  nlohmann::json j;
  j["order"] = t.cls->order;
  j["exponent"] = t.exponent;
  j["class_reps"] = nlohmann::json::array();
  j["class_sizes"] = nlohmann::json::array();
  for (size_t c = 0; c < t.cls->reps.size(); ++c) {
    j["class_reps"].push_back(t.cls->reps[c].cycle_string());
    j["class_sizes"].push_back(t.cls->sizes[c]);
  }
  j["degrees"] = t.degrees;
  j["irreducibles"] = nlohmann::json::array();
  for (const auto& chi : t.irr) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : chi.values) {
      nlohmann::json triples = nlohmann::json::array();
      auto coords = v.coords_in(t.exponent);
      for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        triples.push_back({i, coords[i].get_num().get_str(),
                           coords[i].get_den().get_str()});
      }
      row.push_back(std::move(triples));
    }
    j["irreducibles"].push_back(std::move(row));
  }
  return j.dump(2);
}

}  // namespace sylres

#include "sylres/numth.hpp"

#include <algorithm>
#include <numeric>

#include "sylres/errors.hpp"

namespace sylres {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::map<u64, int> factorize(u64 n) {
  std::map<u64, int> f;
  for (u64 d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> ps;
  for (auto& [p, e] : factorize(n)) ps.push_back(p);
  return ps;
}

u64 euler_phi(u64 n) {
  u64 r = n;
  for (u64 p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

u64 p_part(u64 n, u64 p) {
  u64 r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }
u64 lcm_u64(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

u64 pow_u64(u64 base, u64 exp) {
  u64 r = 1;
  while (exp--) r *= base;
  return r;
}

u64 mod_pow(u64 base, u64 exp, u64 mod) {
  u64 r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

u64 mod_inv(u64 a, u64 mod) { return mod_pow(a % mod, mod - 2, mod); }

u64 primitive_root(u64 ell) {
  const u64 m = ell - 1;
  auto ps = prime_divisors(m);
  for (u64 g = 2; g < ell; ++g) {
    bool ok = true;
    for (u64 p : ps)
      if (mod_pow(g, m / p, ell) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error("no primitive root found");
}

std::pair<u64, bool> mod_sqrt(u64 a, u64 ell) {
  a %= ell;
  if (a == 0) return {0, true};
  if (mod_pow(a, (ell - 1) / 2, ell) != 1) return {0, false};
  if (ell % 4 == 3) return {mod_pow(a, (ell + 1) / 4, ell), true};
  // Tonelli-Shanks
  u64 q = ell - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (mod_pow(z, (ell - 1) / 2, ell) == 1) ++z;
  u64 m = s;
  u64 c = mod_pow(z, q, ell);
  u64 t = mod_pow(a, q, ell);
  u64 r = mod_pow(a, (q + 1) / 2, ell);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = tt * tt % ell;
      ++i;
    }
    u64 b = mod_pow(c, u64(1) << (m - i - 1), ell);
    m = i;
    c = b * b % ell;
    t = t * c % ell;
    r = r * b % ell;
  }
  return {r, true};
}

namespace {

// polynomial exact division over Z, both monic-led inputs, remainder zero
std::vector<i64> poly_div_exact(const std::vector<i64>& num,
                                const std::vector<i64>& den) {
  std::vector<i64> rem = num;
  std::vector<i64> quot(num.size() - den.size() + 1, 0);
  const i64 lead = den.back();
  for (int i = int(rem.size()) - 1; i >= int(den.size()) - 1; --i) {
    i64 c = rem[i] / lead;
    quot[i - (den.size() - 1)] = c;
    if (c != 0)
      for (size_t j = 0; j < den.size(); ++j)
        rem[i - (den.size() - 1) + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

std::vector<i64> cyclotomic_polynomial(u64 n) {
  // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d, built bottom-up over divisors
  std::map<u64, std::vector<i64>> memo;
  for (u64 d : divisors(n)) {
    std::vector<i64> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (u64 e : divisors(d)) {
      if (e == d) continue;
      num = poly_div_exact(num, memo.at(e));
    }
    memo[d] = std::move(num);
  }
  return memo.at(n);
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> ds;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace sylres

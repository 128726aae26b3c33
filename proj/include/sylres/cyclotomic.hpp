#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sylres/numth.hpp"

namespace sylres {

// Exact element of the cyclotomic field Q(zeta_e), stored in the power
// basis {zeta_e^i : 0 <= i < phi(e)} reduced modulo the e-th cyclotomic
// polynomial. Values are always conductor-normalized: the stored conductor
// is the smallest f (never 2 mod 4) with the value in Q(zeta_f), so equal
// values have identical representations.
class Cyclotomic {
 public:
  Cyclotomic();  // zero
  explicit Cyclotomic(const mpq_class& rational);
  explicit Cyclotomic(long n);
  static Cyclotomic root_of_unity(u64 e, long long k);  // zeta_e^k
  static Cyclotomic sqrt_minus_one() { return root_of_unity(4, 1); }

  u64 conductor() const { return conductor_; }
  const std::vector<mpq_class>& coords() const { return coords_; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const mpq_class& s) const;
  Cyclotomic conj() const;          // zeta_e -> zeta_e^{-1}
  Cyclotomic galois(u64 a) const;   // zeta_e -> zeta_e^a, gcd(a, e) = 1

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  // total order on canonical forms (conductor, then coords); used only to
  // fix deterministic table orderings
  int cmp(const Cyclotomic& o) const;

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  bool is_integer() const;
  mpq_class rational_value() const;  // requires is_rational()

  // coordinates lifted into the power basis of Q(zeta_e), conductor_ | e
  std::vector<mpq_class> coords_in(u64 e) const;

  std::string str() const;

 private:
  u64 conductor_;
  std::vector<mpq_class> coords_;

  void normalize();
  std::vector<mpq_class> galois_unnormalized(u64 a) const;
};

u64 lcm_conductor(u64 a, u64 b);

}  // namespace sylres

#pragma once

#include "sylres/numth.hpp"

namespace sylres {

// Small finite field F_q for the supported parameter set. Elements are
// encoded as 0..q-1: the polynomial sum c_i t^i maps to sum c_i p^i.
// Non-prime fields use fixed irreducible polynomials:
//   F_4 = F_2[t]/(t^2+t+1), F_8 = F_2[t]/(t^3+t+1), F_9 = F_3[t]/(t^2+1).
class GF {
 public:
  static const GF& get(u64 q);  // UnsupportedParameter outside the set

  u64 q() const { return q_; }
  u64 p() const { return p_; }
  int deg() const { return deg_; }

  u64 add(u64 a, u64 b) const { return add_[a * q_ + b]; }
  u64 sub(u64 a, u64 b) const { return add_[a * q_ + neg_[b]]; }
  u64 mul(u64 a, u64 b) const { return mul_[a * q_ + b]; }
  u64 neg(u64 a) const { return neg_[a]; }
  u64 inv(u64 a) const { return inv_[a]; }  // a != 0
  u64 pow(u64 a, u64 e) const;
  u64 element_order(u64 a) const;  // multiplicative order, a != 0
  u64 generator() const { return gen_; }  // generator of the unit group

 private:
  explicit GF(u64 q);
  u64 q_, p_;
  int deg_;
  u64 gen_ = 0;
  std::vector<u64> add_, mul_, neg_, inv_;
};

}  // namespace sylres

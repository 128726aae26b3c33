#pragma once

#include <memory>
#include <vector>

#include "sylres/cyclotomic.hpp"
#include "sylres/permgroup.hpp"

namespace sylres {

// Class function on a group, tagged by the group's shared ClassData. One
// Cyclotomic value per conjugacy class, in canonical class order.
struct ClassFunction {
  std::shared_ptr<const ClassData> cls;
  std::vector<Cyclotomic> values;

  bool valid() const { return cls != nullptr; }
  const Cyclotomic& at(int c) const { return values[size_t(c)]; }
  const Cyclotomic& degree_value() const { return values[0]; }
  // identity-class value as a nonnegative machine integer (characters)
  u64 degree_u64() const;

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;  // pointwise
  ClassFunction operator*(const mpq_class& s) const;
  bool operator==(const ClassFunction& o) const;
};

ClassFunction trivial_character(std::shared_ptr<const ClassData> cls);
ClassFunction regular_character(std::shared_ptr<const ClassData> cls);

// fusion[c] = parent class index of the c-th subgroup class
using ClassFusion = std::vector<int>;

ClassFusion class_fusion(const std::shared_ptr<const ClassData>& sub,
                         const std::shared_ptr<const ClassData>& parent);

mpq_class inner_product(const ClassFunction& a, const ClassFunction& b);

ClassFunction restrict_to(const ClassFunction& chi,
                          const std::shared_ptr<const ClassData>& sub,
                          const ClassFusion& fusion);

// induced class function lambda^P for lambda on Q <= P
ClassFunction induce(const ClassFunction& lambda, const PermGroup& q,
                     const PermGroup& p);

}  // namespace sylres

#include "sylres/gf.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>

#include "sylres/errors.hpp"

namespace sylres {

namespace {

struct FieldSpec {
  u64 p;
  int deg;
  // reduction polynomial: t^deg = sum red[i] t^i (coefficients mod p)
  std::array<u64, 3> red;
};

FieldSpec spec_for(u64 q) {
  switch (q) {
    case 2: return {2, 1, {}};
    case 3: return {3, 1, {}};
    case 5: return {5, 1, {}};
    case 7: return {7, 1, {}};
    case 11: return {11, 1, {}};
    case 13: return {13, 1, {}};
    case 4: return {2, 2, {1, 1, 0}};   // t^2 = t + 1
    case 8: return {2, 3, {1, 1, 0}};   // t^3 = t + 1
    case 9: return {3, 2, {2, 0, 0}};   // t^2 = -1
    default:
      throw UnsupportedParameter("unsupported field size " +
                                 std::to_string(q));
  }
}

}  // namespace

GF::GF(u64 q) : q_(q) {
  FieldSpec sp = spec_for(q);
  p_ = sp.p;
  deg_ = sp.deg;
  auto digits = [&](u64 a) {
    std::array<u64, 3> d{};
    for (int i = 0; i < deg_; ++i) {
      d[size_t(i)] = a % p_;
      a /= p_;
    }
    return d;
  };
  auto encode = [&](const std::array<u64, 3>& d) {
    u64 a = 0;
    for (int i = deg_ - 1; i >= 0; --i) a = a * p_ + d[size_t(i)];
    return a;
  };
  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  for (u64 a = 0; a < q_; ++a) {
    auto da = digits(a);
    std::array<u64, 3> dn{};
    for (int i = 0; i < deg_; ++i) dn[size_t(i)] = (p_ - da[size_t(i)]) % p_;
    neg_[a] = encode(dn);
    for (u64 b = 0; b < q_; ++b) {
      auto db = digits(b);
      std::array<u64, 3> ds{};
      for (int i = 0; i < deg_; ++i)
        ds[size_t(i)] = (da[size_t(i)] + db[size_t(i)]) % p_;
      add_[a * q_ + b] = encode(ds);
      // polynomial product, then reduce t^deg (and t^{deg+1}) via red
      std::array<u64, 5> prod{};
      for (int i = 0; i < deg_; ++i)
        for (int j = 0; j < deg_; ++j)
          prod[size_t(i + j)] =
              (prod[size_t(i + j)] + da[size_t(i)] * db[size_t(j)]) % p_;
      for (int k = 2 * (deg_ - 1); k >= deg_; --k) {
        u64 c = prod[size_t(k)];
        if (c == 0) continue;
        prod[size_t(k)] = 0;
        for (int i = 0; i < deg_; ++i)
          prod[size_t(k - deg_ + i)] =
              (prod[size_t(k - deg_ + i)] + c * sp.red[size_t(i)]) % p_;
      }
      std::array<u64, 3> dm{};
      for (int i = 0; i < deg_; ++i) dm[size_t(i)] = prod[size_t(i)];
      mul_[a * q_ + b] = encode(dm);
    }
  }
  for (u64 a = 1; a < q_; ++a)
    for (u64 b = 1; b < q_; ++b)
      if (mul(a, b) == 1) inv_[a] = b;
  for (u64 a = 2; a < q_ && gen_ == 0; ++a)
    if (element_order(a) == q_ - 1) gen_ = a;
  if (q_ == 2) gen_ = 1;
}

u64 GF::pow(u64 a, u64 e) const {
  u64 r = 1;
  for (u64 i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

u64 GF::element_order(u64 a) const {
  u64 r = a, o = 1;
  while (r != 1) {
    r = mul(r, a);
    ++o;
  }
  return o;
}

const GF& GF::get(u64 q) {
  static std::mutex m;
  static std::map<u64, std::unique_ptr<GF>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, std::unique_ptr<GF>(new GF(q))).first;
  return *it->second;
}

}  // namespace sylres

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sylres {

// Permutation of {0..n-1}; the JSON interface is 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint16_t> images);
  static Permutation identity(unsigned degree);
  static Permutation from_one_based(const std::vector<long>& images);
  static Permutation from_cycles(const std::string& cycles, unsigned degree);

  unsigned degree() const { return unsigned(img_.size()); }
  std::uint16_t operator()(std::uint16_t point) const { return img_[point]; }

  // (a*b)(x) = b(a(x)): apply a first
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  Permutation conjugate(const Permutation& g) const;  // g^-1 * this * g
  Permutation power(long long e) const;

  bool is_identity() const;
  unsigned long long order() const;

  bool operator==(const Permutation& other) const { return img_ == other.img_; }
  // lexicographic on image lists
  bool operator<(const Permutation& other) const { return img_ < other.img_; }

  const std::vector<std::uint16_t>& images() const { return img_; }
  std::vector<long> one_based() const;
  std::string cycle_string() const;  // 1-based, "()" for the identity

 private:
  std::vector<std::uint16_t> img_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// canonical element order: by element order, then lexicographic images
struct CanonicalPermLess {
  bool operator()(const Permutation& a, const Permutation& b) const {
    auto oa = a.order(), ob = b.order();
    if (oa != ob) return oa < ob;
    return a < b;
  }
};

}  // namespace sylres

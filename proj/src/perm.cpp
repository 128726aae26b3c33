#include "sylres/perm.hpp"

#include <numeric>
#include <sstream>

#include "sylres/errors.hpp"
#include "sylres/numth.hpp"

namespace sylres {

Permutation::Permutation(std::vector<std::uint16_t> images)
    : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v])
      throw MalformedPermutation("image list is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned degree) {
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::from_one_based(const std::vector<long>& images) {
  std::vector<std::uint16_t> img;
  img.reserve(images.size());
  for (long v : images) {
    if (v < 1 || v > long(images.size()))
      throw MalformedPermutation("point out of range in image list");
    img.push_back(std::uint16_t(v - 1));
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(const std::string& cycles,
                                     unsigned degree) {
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<long> cur;
  long num = -1;
  auto close_number = [&]() {
    if (num >= 0) {
      cur.push_back(num);
      num = -1;
    }
  };
  auto close_cycle = [&]() {
    close_number();
    for (size_t i = 0; i < cur.size(); ++i) {
      long a = cur[i], b = cur[(i + 1) % cur.size()];
      if (a < 1 || a > long(degree) || b < 1 || b > long(degree))
        throw ParseError("cycle point out of range: " + cycles);
      if (img[a - 1] != std::uint16_t(a - 1))
        throw ParseError("point repeated in cycle string: " + cycles);
      img[a - 1] = std::uint16_t(b - 1);
    }
    cur.clear();
  };
  for (char c : cycles) {
    if (c >= '0' && c <= '9') {
      num = (num < 0 ? 0 : num) * 10 + (c - '0');
    } else if (c == ',' || c == ' ') {
      close_number();
    } else if (c == '(') {
      close_number();
    } else if (c == ')') {
      close_cycle();
    } else {
      throw ParseError(std::string("bad character '") + c +
                       "' in cycle string: " + cycles);
    }
  }
  if (!cur.empty() || num >= 0) throw ParseError("unclosed cycle: " + cycles);
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& other) const {
  std::vector<std::uint16_t> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[i] = other.img_[img_[i]];
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[img_[i]] = std::uint16_t(i);
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::conjugate(const Permutation& g) const {
  return g.inverse() * (*this) * g;
}

Permutation Permutation::power(long long e) const {
  auto n = (long long)order();
  e %= n;
  if (e < 0) e += n;
  Permutation r = identity(degree());
  Permutation base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

unsigned long long Permutation::order() const {
  std::vector<bool> seen(img_.size(), false);
  unsigned long long ord = 1;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    unsigned long long len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    ord = lcm_u64(ord, len);
  }
  return ord;
}

std::vector<long> Permutation::one_based() const {
  std::vector<long> v;
  v.reserve(img_.size());
  for (auto x : img_) v.push_back(long(x) + 1);
  return v;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    os << '(' << i + 1;
    seen[i] = true;
    size_t j = img_[i];
    while (j != i) {
      os << ',' << j + 1;
      seen[j] = true;
      j = img_[j];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace sylres

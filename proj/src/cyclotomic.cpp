#include "sylres/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "sylres/errors.hpp"

namespace sylres {

namespace {

// per-conductor data: reduction rows zeta^k mod Phi_e for 0 <= k < e
struct CycloContext {
  u64 e = 1;
  u64 phi = 1;
  std::vector<std::vector<mpz_class>> power;
};

const CycloContext& context(u64 e) {
  static std::mutex mu;
  static std::map<u64, std::unique_ptr<CycloContext>> registry;
  std::lock_guard lock(mu);
  auto it = registry.find(e);
  if (it != registry.end()) return *it->second;

  auto ctx = std::make_unique<CycloContext>();
  ctx->e = e;
  auto phi_poly = cyclotomic_polynomial(e);
  ctx->phi = phi_poly.size() - 1;
  const u64 d = ctx->phi;
  // x^d = -(c_0 + c_1 x + ... + c_{d-1} x^{d-1}), Phi monic
  std::vector<mpz_class> top(d);
  for (u64 i = 0; i < d; ++i) top[i] = -phi_poly[i];
  ctx->power.resize(e);
  for (u64 k = 0; k < e; ++k) {
    if (k < d) {
      ctx->power[k].assign(d, 0);
      ctx->power[k][k] = 1;
    } else {
      // multiply the previous row by x
      const auto& prev = ctx->power[k - 1];
      std::vector<mpz_class> row(d, 0);
      for (u64 i = 0; i + 1 < d; ++i) row[i + 1] = prev[i];
      if (prev[d - 1] != 0)
        for (u64 i = 0; i < d; ++i) row[i] += prev[d - 1] * top[i];
      ctx->power[k] = std::move(row);
    }
  }
  const CycloContext& ref = *ctx;
  registry.emplace(e, std::move(ctx));
  return ref;
}

}  // namespace

u64 lcm_conductor(u64 a, u64 b) { return lcm_u64(a, b); }

Cyclotomic::Cyclotomic() : conductor_(1), coords_(1, mpq_class(0)) {}

Cyclotomic::Cyclotomic(const mpq_class& rational)
    : conductor_(1), coords_(1, rational) {
  coords_[0].canonicalize();
}

Cyclotomic::Cyclotomic(long n) : conductor_(1), coords_(1, mpq_class(n)) {}

Cyclotomic Cyclotomic::root_of_unity(u64 e, long long k) {
  long long m = k % (long long)e;
  if (m < 0) m += e;
  u64 g = gcd_u64(u64(m), e);
  u64 o = e / g;  // order of zeta_e^k
  u64 kk = (o == e) ? u64(m) : u64(m) / g;
  Cyclotomic x;
  x.conductor_ = o;
  const auto& ctx = context(o);
  x.coords_.assign(ctx.phi, mpq_class(0));
  for (u64 i = 0; i < ctx.phi; ++i) x.coords_[i] = ctx.power[kk % o][i];
  x.normalize();
  return x;
}

std::vector<mpq_class> Cyclotomic::coords_in(u64 e) const {
  if (e % conductor_ != 0) throw Error("conductor does not divide target");
  const auto& ctx = context(e);
  std::vector<mpq_class> out(ctx.phi, mpq_class(0));
  u64 step = e / conductor_;
  for (u64 i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    const auto& row = ctx.power[(step * i) % e];
    for (u64 j = 0; j < ctx.phi; ++j)
      if (row[j] != 0) out[j] += coords_[i] * row[j];
  }
  return out;
}

namespace {

// Gaussian elimination solve of the embedding system: columns are the
// lifted basis vectors of Q(zeta_f) inside Q(zeta_e). Returns coords in
// the subfield; the system is consistent by the caller's invariance check.
std::vector<mpq_class> express_in_subfield(u64 e, u64 f,
                                           const std::vector<mpq_class>& v) {
  const auto& ce = context(e);
  const auto& cf = context(f);
  const u64 rows = ce.phi, cols = cf.phi;
  u64 step = e / f;
  std::vector<std::vector<mpq_class>> a(rows,
                                        std::vector<mpq_class>(cols + 1, 0));
  for (u64 j = 0; j < cols; ++j) {
    const auto& row = ce.power[(step * j) % e];
    for (u64 i = 0; i < rows; ++i) a[i][j] = row[i];
  }
  for (u64 i = 0; i < rows; ++i) a[i][cols] = v[i];

  std::vector<long> pivot_col(rows, -1);
  u64 r = 0;
  for (u64 c = 0; c < cols && r < rows; ++c) {
    u64 p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    mpq_class inv = 1 / a[r][c];
    for (u64 j = c; j <= cols; ++j) a[r][j] *= inv;
    for (u64 i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class m = a[i][c];
      for (u64 j = c; j <= cols; ++j) a[i][j] -= m * a[r][j];
    }
    pivot_col[r] = long(c);
    ++r;
  }
  std::vector<mpq_class> out(cols, 0);
  for (u64 i = 0; i < r; ++i) out[pivot_col[i]] = a[i][cols];
  return out;
}

}  // namespace

void Cyclotomic::normalize() {
  for (auto& c : coords_) c.canonicalize();
  bool descended = true;
  while (descended && conductor_ > 1) {
    descended = false;
    for (u64 p : prime_divisors(conductor_)) {
      u64 f = conductor_ / p;
      // invariance under {a = 1 mod f, gcd(a, e) = 1} means the value
      // lies in Q(zeta_f)
      bool invariant = true;
      for (u64 a = 1 + f; a < conductor_; a += f) {
        if (gcd_u64(a, conductor_) != 1) continue;
        if (!(galois_unnormalized(a) == coords_)) {
          invariant = false;
          break;
        }
      }
      if (!invariant) continue;
      coords_ = express_in_subfield(conductor_, f, coords_);
      conductor_ = f;
      descended = true;
      break;
    }
  }
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  u64 e = lcm_conductor(conductor_, o.conductor_);
  Cyclotomic r;
  r.conductor_ = e;
  r.coords_ = coords_in(e);
  auto oc = o.coords_in(e);
  for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += oc[i];
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  return *this + (-o);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (is_zero() || o.is_zero()) return Cyclotomic();
  u64 e = lcm_conductor(conductor_, o.conductor_);
  const auto& ctx = context(e);
  auto a = coords_in(e);
  auto b = o.coords_in(e);
  const u64 d = ctx.phi;
  std::vector<mpq_class> conv(2 * d - 1, 0);
  for (u64 i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (u64 j = 0; j < d; ++j)
      if (b[j] != 0) conv[i + j] += a[i] * b[j];
  }
  Cyclotomic r;
  r.conductor_ = e;
  r.coords_.assign(d, mpq_class(0));
  for (u64 k = 0; k < conv.size(); ++k) {
    if (conv[k] == 0) continue;
    if (k < d) {
      r.coords_[k] += conv[k];
    } else {
      const auto& row = ctx.power[k % e];
      for (u64 j = 0; j < d; ++j)
        if (row[j] != 0) r.coords_[j] += conv[k] * row[j];
    }
  }
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::operator*(const mpq_class& s) const {
  if (s == 0) return Cyclotomic();
  Cyclotomic r = *this;
  for (auto& c : r.coords_) {
    c *= s;
    c.canonicalize();
  }
  return r;
}

std::vector<mpq_class> Cyclotomic::galois_unnormalized(u64 a) const {
  const auto& ctx = context(conductor_);
  std::vector<mpq_class> out(ctx.phi, mpq_class(0));
  for (u64 i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    const auto& row = ctx.power[(a * i) % conductor_];
    for (u64 j = 0; j < ctx.phi; ++j)
      if (row[j] != 0) out[j] += coords_[i] * row[j];
  }
  for (auto& c : out) c.canonicalize();
  return out;
}

Cyclotomic Cyclotomic::galois(u64 a) const {
  a %= conductor_;
  if (gcd_u64(a, conductor_) != 1)
    throw Error("galois exponent not coprime to conductor");
  Cyclotomic r;
  r.conductor_ = conductor_;
  r.coords_ = galois_unnormalized(a);
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  if (conductor_ == 1) return *this;
  return galois(conductor_ - 1);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return conductor_ == o.conductor_ && coords_ == o.coords_;
}

int Cyclotomic::cmp(const Cyclotomic& o) const {
  if (conductor_ != o.conductor_) return conductor_ < o.conductor_ ? -1 : 1;
  for (size_t i = 0; i < coords_.size(); ++i) {
    int c = ::cmp(coords_[i], o.coords_[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool Cyclotomic::is_zero() const {
  return conductor_ == 1 && coords_[0] == 0;
}

bool Cyclotomic::is_integer() const {
  for (const auto& c : coords_)
    if (c.get_den() != 1) return false;
  return true;
}

mpq_class Cyclotomic::rational_value() const {
  if (conductor_ != 1) throw Error("value is irrational");
  return coords_[0];
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coords_[i];
    if (i > 0) os << "*z" << conductor_ << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace sylres

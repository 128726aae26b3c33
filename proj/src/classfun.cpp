#include "sylres/classfun.hpp"

#include "sylres/errors.hpp"

namespace sylres {

u64 ClassFunction::degree_u64() const {
  const Cyclotomic& d = values[0];
  if (!d.is_rational() || d.rational_value().get_den() != 1 ||
      d.rational_value() < 0)
    throw NotACharacter("identity value is not a nonnegative integer");
  return d.rational_value().get_num().get_ui();
}

static void check_same(const ClassFunction& a, const ClassFunction& b) {
  if (a.cls.get() != b.cls.get())
    throw GroupMismatch("class functions live on different groups");
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  check_same(*this, o);
  ClassFunction r{cls, values};
  for (size_t i = 0; i < r.values.size(); ++i)
    r.values[i] = r.values[i] + o.values[i];
  return r;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  check_same(*this, o);
  ClassFunction r{cls, values};
  for (size_t i = 0; i < r.values.size(); ++i)
    r.values[i] = r.values[i] - o.values[i];
  return r;
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  check_same(*this, o);
  ClassFunction r{cls, values};
  for (size_t i = 0; i < r.values.size(); ++i)
    r.values[i] = r.values[i] * o.values[i];
  return r;
}

ClassFunction ClassFunction::operator*(const mpq_class& s) const {
  ClassFunction r{cls, values};
  for (auto& v : r.values) v = v * s;
  return r;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  return cls.get() == o.cls.get() && values == o.values;
}

ClassFunction trivial_character(std::shared_ptr<const ClassData> cls) {
  ClassFunction f;
  f.values.assign(cls->reps.size(), Cyclotomic(1L));
  f.cls = std::move(cls);
  return f;
}

ClassFunction regular_character(std::shared_ptr<const ClassData> cls) {
  ClassFunction f;
  f.values.assign(cls->reps.size(), Cyclotomic());
  f.values[0] = Cyclotomic(long(cls->order));
  f.cls = std::move(cls);
  return f;
}

ClassFusion class_fusion(const std::shared_ptr<const ClassData>& sub,
                         const std::shared_ptr<const ClassData>& parent) {
  ClassFusion fusion(sub->reps.size());
  for (size_t c = 0; c < sub->reps.size(); ++c)
    fusion[c] = parent->class_of(sub->reps[c]);
  return fusion;
}

mpq_class inner_product(const ClassFunction& a, const ClassFunction& b) {
  check_same(a, b);
  Cyclotomic acc;
  for (size_t k = 0; k < a.values.size(); ++k)
    acc = acc + a.values[k] * b.values[k].conj() *
                    mpq_class(long(a.cls->sizes[k]));
  acc = acc * mpq_class(1, long(a.cls->order));
  if (!acc.is_rational())
    throw Error("inner product of class functions is irrational");
  return acc.rational_value();
}

ClassFunction restrict_to(const ClassFunction& chi,
                          const std::shared_ptr<const ClassData>& sub,
                          const ClassFusion& fusion) {
  if (fusion.size() != sub->reps.size())
    throw GroupMismatch("fusion length does not match subgroup class count");
  ClassFunction r;
  r.cls = sub;
  r.values.reserve(fusion.size());
  for (int f : fusion) r.values.push_back(chi.values[size_t(f)]);
  return r;
}

ClassFunction induce(const ClassFunction& lambda, const PermGroup& q,
                     const PermGroup& p) {
  if (!q.is_subgroup_of(p)) throw NotASubgroup("Q is not a subgroup of P");
  auto cdq = q.classes();
  auto cdp = p.classes();
  if (lambda.cls.get() != cdq.get())
    throw GroupMismatch("lambda does not live on Q");
  const u64 np = cdp->order, nq = cdq->order;
  // lambda^P(x) = |C_P(x)|/|Q| * sum over the P-class of x intersected
  // with Q; accumulate by sweeping Q once
  std::vector<Cyclotomic> acc(cdp->reps.size());
  for (const auto& z : q.elements(caps().element_cap)) {
    int pc = cdp->class_of(z);
    int qc = cdq->class_of(z);
    acc[size_t(pc)] = acc[size_t(pc)] + lambda.values[size_t(qc)];
  }
  ClassFunction r;
  r.cls = cdp;
  r.values.resize(acc.size());
  for (size_t i = 0; i < acc.size(); ++i)
    r.values[i] =
        acc[i] * mpq_class(long(np), long(nq * cdp->sizes[i]));
  return r;
}

}  // namespace sylres

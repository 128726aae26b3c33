#pragma once

#include <string>

#include "sylres/classfun.hpp"

namespace sylres {

struct CharacterTable {
  PermGroup group;
  std::shared_ptr<const ClassData> cls;
  u64 exponent = 1;
  std::vector<ClassFunction> irr;  // sorted by (degree, value order)
  std::vector<u64> degrees;

  size_t size() const { return irr.size(); }
};

// Dixon-Schneider over F_l, l = 1 mod exponent, l > 2 sqrt(|G|); exact lift
CharacterTable character_table(const PermGroup& g);

// exact row and column orthogonality plus degree-sum check; throws on failure
void verify_table(const CharacterTable& t);

// multiplicities of theta in Irr(P); NotACharacter on negative/non-integral
std::vector<mpz_class> decompose(const ClassFunction& theta,
                                 const CharacterTable& table);

// reconstruction sum m_i * chi_i
ClassFunction combine(const std::vector<mpz_class>& m,
                      const CharacterTable& table);

// JSON export: exponent, class reps/sizes, values as (exp, num, den) triples
std::string table_to_json(const CharacterTable& t);

}  // namespace sylres

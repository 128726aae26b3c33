#pragma once

#include <gmpxx.h>

#include <vector>

namespace sylres {

using IntMat = std::vector<std::vector<mpz_class>>;
using IntVec = std::vector<mpz_class>;

// U * M * V = S with S diagonal, d_1 | d_2 | ...; U, V unimodular
struct SNFResult {
  IntMat s, u, v;
  size_t rank = 0;  // number of nonzero diagonal entries
};

SNFResult smith_normal_form(const IntMat& m);

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec_mul(const IntMat& a, const IntVec& x);
mpz_class determinant(const IntMat& a);  // Bareiss, exact

}  // namespace sylres

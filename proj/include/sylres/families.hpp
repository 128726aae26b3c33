#pragma once

#include <array>
#include <string>

#include "sylres/permgroup.hpp"

namespace sylres {

// Built-in group families with known Sylow-2 structure.
enum class Family { dihedral, quaternion, semidihedral, wreath, sl2, gl2, psl2 };

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // ParseError on unknown

// Parameter meaning: group order for dihedral / quaternion / semidihedral
// (a power of 2 times 2 resp. a 2-power, at most 256), n for wreath
// (C_{2^n} wr C_2, n <= 4), the field size q for sl2 / gl2 / psl2.
// Throws UnsupportedParameter outside the supported range and audits a
// structure fingerprint of the constructed group.
PermGroup make_family(Family f, u64 param);

// Permutation realizing v -> Mv on the nonzero vectors of F_q^2,
// M = [[a,b],[c,d]]; point (u,v) has index u*q + v - 1. This matches the
// point labelling used by the sl2/gl2 constructors.
Permutation matrix_on_vectors(u64 q, const std::array<u64, 4>& m);

struct OracleLine {
  std::string item;
  bool pass = false;
  std::string detail;
};

struct OracleReport {
  std::string family;
  u64 q = 0;
  std::vector<OracleLine> lines;
  bool all_pass() const;
};

// Closed-form decomposition checks for the restrictions of the even-degree
// irreducible characters of SL(2,q) (q in {5,7,9,11,13}) and GL(2,q)
// (q in {5,7}) to a Sylow 2-subgroup, compared exactly against the
// computed character tables.
OracleReport sl2_closed_form(u64 q);
OracleReport gl2_closed_form(u64 q);

}  // namespace sylres

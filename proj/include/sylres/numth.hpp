#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace sylres {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n);

// prime -> multiplicity, by trial division
std::map<u64, int> factorize(u64 n);

std::vector<u64> prime_divisors(u64 n);

u64 euler_phi(u64 n);

u64 p_part(u64 n, u64 p);

u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);

u64 pow_u64(u64 base, u64 exp);  // overflow-unchecked small powers

// modular arithmetic, modulus < 2^32 assumed for products
u64 mod_pow(u64 base, u64 exp, u64 mod);
u64 mod_inv(u64 a, u64 mod);

// smallest primitive root mod prime ell
u64 primitive_root(u64 ell);

// square root mod odd prime (Tonelli-Shanks); second value false if none
std::pair<u64, bool> mod_sqrt(u64 a, u64 ell);

// coefficients of the n-th cyclotomic polynomial, ascending degree
std::vector<i64> cyclotomic_polynomial(u64 n);

std::vector<u64> divisors(u64 n);

}  // namespace sylres

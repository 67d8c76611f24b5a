#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace bsr {

// Exponents scale with p^e, so machine words overflow around e ~ 40 even for
// p = 2. Everything arithmetic runs on these two types.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int pow_int(const Int& base, std::uint64_t exp);

// Floor/ceil division with divisor > 0 (cpp_int's operator/ truncates toward
// zero, which is wrong for negative numerators).
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

Int floor_rat(const Rat& x);
bool is_integer(const Rat& x);

// Miller-Rabin; deterministic in effect for anything reachable here.
bool is_prime(const Int& n);

// Inverse of a modulo m, gcd(a, m) = 1, m >= 1. Result in [0, m).
Int mod_inverse(const Int& a, const Int& m);

// Least d >= 1 with base^d = 1 (mod modulus); gcd(base, modulus) must be 1.
// modulus = 1 gives 1. Throws resource_error past `cap` iterations.
std::uint64_t multiplicative_order(const Int& base, const Int& modulus,
                                   std::uint64_t cap = 10'000'000);

// Checked narrowing for loop bounds; throws resource_error when `v` does not
// fit (such a value always means an enumeration budget is about to explode).
std::uint64_t to_u64(const Int& v, const char* what);

}  // namespace bsr

#include "bsr/numeric.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>

#include "bsr/errors.hpp"

namespace bsr {

Int pow_int(const Int& base, std::uint64_t exp) {
  Int result = 1;
  Int b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

Int floor_div(const Int& a, const Int& b) {
  if (b <= 0) throw precondition_error("floor_div: divisor must be positive");
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  if (b <= 0) throw precondition_error("ceil_div: divisor must be positive");
  Int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

Int floor_rat(const Rat& x) {
  return floor_div(numerator(x), denominator(x));
}

bool is_integer(const Rat& x) { return denominator(x) == 1; }

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }
  // 64 rounds: error probability < 4^-64, far below any hardware fault rate.
  static boost::random::mt19937_64 gen(0x9e3779b97f4a7c15ULL);
  return boost::multiprecision::miller_rabin_test(n, 64, gen);
}

Int mod_inverse(const Int& a, const Int& m) {
  if (m < 1) throw precondition_error("mod_inverse: modulus must be >= 1");
  if (m == 1) return 0;
  // Extended Euclid on (a mod m, m).
  Int r0 = ((a % m) + m) % m, r1 = m;
  Int s0 = 1, s1 = 0;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = r1; r1 = r2;
    Int s2 = s0 - q * s1;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw precondition_error("mod_inverse: arguments are not coprime");
  return ((s0 % m) + m) % m;
}

std::uint64_t multiplicative_order(const Int& base, const Int& modulus,
                                   std::uint64_t cap) {
  if (modulus < 1) throw precondition_error("multiplicative_order: modulus must be >= 1");
  if (modulus == 1) return 1;
  Int b = ((base % modulus) + modulus) % modulus;
  if (gcd(b, modulus) != 1)
    throw precondition_error("multiplicative_order: base and modulus are not coprime");
  Int cur = b;
  for (std::uint64_t d = 1; d <= cap; ++d) {
    if (cur == 1) return d;
    cur = (cur * b) % modulus;
  }
  throw resource_error("multiplicative_order: no order found within cap iterations");
}

std::uint64_t to_u64(const Int& v, const char* what) {
  if (v < 0 || v > Int(UINT64_MAX))
    throw resource_error(std::string(what) + ": value does not fit in 64 bits");
  return static_cast<std::uint64_t>(v);
}

}  // namespace bsr

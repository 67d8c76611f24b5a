#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "bsr/numeric.hpp"

namespace bsr {

// A monomial is its exponent vector over a fixed set of variables. Entries
// are nonnegative and arbitrary precision.
class Monomial {
 public:
  explicit Monomial(std::vector<Int> exponents);
  static Monomial unit(std::size_t dim);

  std::size_t dim() const { return exps_.size(); }
  const std::vector<Int>& exponents() const { return exps_; }
  const Int& operator[](std::size_t i) const { return exps_[i]; }

  bool is_unit() const;
  Int total_degree() const;
  std::vector<std::size_t> support() const;

  // divides(m) means some monomial multiple of *this equals m, i.e. the
  // exponent vector is coordinatewise <=.
  bool divides(const Monomial& m) const;
  Monomial times(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial scaled(const Int& factor) const;           // exponents * factor, factor >= 1
  Monomial quotient_floor(const Int& divisor) const;  // floor(exponents / divisor)

  bool operator==(const Monomial&) const = default;
  // Total degree first, then lex on exponents: the canonical generator order.
  std::strong_ordering operator<=>(const Monomial& other) const;

 private:
  std::vector<Int> exps_;
};

// A monomial ideal, stored as its unique minimal generating set sorted in
// canonical order. No generators encodes the zero ideal; the single unit
// monomial encodes the whole ring.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t dim, std::vector<Monomial> generators);
  static MonomialIdeal zero(std::size_t dim);
  static MonomialIdeal whole_ring(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;          // whole ring
  bool is_proper() const { return !is_unit(); }

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  Int max_generator_degree() const;  // 0 for the zero ideal
  Int max_exponent() const;          // largest single exponent across generators

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::size_t dim_;
  std::vector<Monomial> gens_;
};

// Strict total order on ideals of equal dimension (generator sequences
// compared lexicographically); used for deterministic tie-breaking.
bool canonical_less(const MonomialIdeal& a, const MonomialIdeal& b);

// Drops generators divisible by another one; result is the minimal
// generating antichain. Same normalization the MonomialIdeal constructor does.
MonomialIdeal minimalize(std::size_t dim, std::vector<Monomial> generators);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, std::uint64_t s);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// Whether some power of `a` lands in `j`. Purely combinatorial: every
// generator f of a must be divisible by enough of j's variables, i.e. some
// generator v of j has supp(v) contained in supp(f). Throws when j is the
// whole ring.
bool radical_contains(const MonomialIdeal& j, const MonomialIdeal& a);

// Writes j as an irredundant intersection of ideals generated by pure powers
// of variables. Deterministic output order. j must be nonzero and proper.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& j);

}  // namespace bsr

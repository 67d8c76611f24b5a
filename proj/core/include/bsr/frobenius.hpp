#pragma once

#include <set>

#include "bsr/monomial.hpp"
#include "bsr/numeric.hpp"

namespace bsr {

// q = p^e with p prime and e >= 1, validated on construction.
class PrimePower {
 public:
  PrimePower(Int p, unsigned e);

  const Int& p() const { return p_; }
  unsigned e() const { return e_; }
  const Int& value() const { return value_; }

 private:
  Int p_;
  unsigned e_;
  Int value_;
};

// J^{[q]}: every generator exponent multiplied by q. For monomial ideals this
// is exactly the ideal of q-th powers of elements' terms, any q >= 1.
MonomialIdeal bracket_power(const MonomialIdeal& j, const Int& q);

// Membership m in J^{[q]} without materializing the bracket: floor the
// exponents of m by q and test ordinary membership.
bool bracket_member(const Monomial& m, const MonomialIdeal& j, const Int& q);

// Image of an ideal under the e-th Cartier/trace operator: generators map to
// the floor of their exponent vectors by p^e. Satisfies the adjunction
//   cartier_image(I, q) subset of J  <=>  I subset of J^{[q]}.
MonomialIdeal cartier_image(const MonomialIdeal& ideal, const PrimePower& q);

struct ChainOptions {
  // Hard cap on chain length r * p^e (and on any `limit` passed explicitly).
  Int step_budget = 100'000;
};

// Indices n in [0, limit) where the Cartier image of a^n differs from that of
// a^{n+1}. Power and image are maintained incrementally.
std::set<Int> cartier_jump_set(const MonomialIdeal& a, const PrimePower& q,
                               const Int& limit, const ChainOptions& opts = {});

// Level-e jump set by direct chain walk: jumps restricted to [0, r*p^e) where
// r is the number of minimal generators of a. Exact but exponential in e;
// meant for small levels and cross-checks.
std::set<Int> nu_set_chain(const MonomialIdeal& a, const PrimePower& q,
                           const ChainOptions& opts = {});

}  // namespace bsr

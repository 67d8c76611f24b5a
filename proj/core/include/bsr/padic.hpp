#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "bsr/numeric.hpp"

namespace bsr {

// Truncated p-adic integer: digits[i] multiplies p^i (little-endian), each
// digit in [0, p).
struct PAdicBranch {
  Int p;
  std::vector<Int> digits;

  // The represented residue modulo p^digits.size().
  Int residue() const;
};

// Digit stream a_0 ... a_{k-1} (b_0 ... b_{d-1})^infinity.
struct PeriodicExpansion {
  Int p;
  std::vector<Int> preperiod;
  std::vector<Int> period;
};

struct ResidueTreeResult {
  std::vector<PAdicBranch> branches;
  // Level (1-based) whose set was empty, which truncates the tree to no
  // branches at all; nullopt when every level contributed.
  std::optional<std::size_t> empty_level;
};

// Intersects residue constraints level by level: a depth-E branch survives
// when for every e <= E its residue mod p^e is the residue of some member of
// level_sets[e-1]. Output sorted by residue.
ResidueTreeResult residue_tree(const Int& p, const std::vector<std::set<Int>>& level_sets);

// Smallest pattern (preperiod length <= max_preperiod, period length d <=
// max_period) that matches the whole digit vector with at least three full
// repetitions of the period inside it; d is minimized first, then the
// preperiod. The digits must be long enough for the worst case, i.e. at
// least max_preperiod + 3*max_period entries.
std::optional<PeriodicExpansion> detect_period(const PAdicBranch& branch,
                                               std::size_t max_preperiod,
                                               std::size_t max_period);

// Value of the expansion as an exact rational: sum of the preperiod plus
// p^k * V / (1 - p^d) where V collects the period digits. The denominator is
// automatically coprime to p.
Rat rational_from_expansion(const PeriodicExpansion& expansion);

// First e digits of a rational with denominator coprime to p.
PAdicBranch digits_of_rational(const Rat& x, const Int& p, std::size_t e);

}  // namespace bsr

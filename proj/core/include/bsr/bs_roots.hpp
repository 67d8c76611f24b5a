#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bsr/monomial.hpp"
#include "bsr/nu.hpp"
#include "bsr/numeric.hpp"
#include "bsr/padic.hpp"

namespace bsr {

enum class RootStatus { certified, periodic_uncertified, unresolved };

// Proof object for one root alpha: a witness ideal j, a slope, and a sample
// depth d such that nu(a, j, p^{e*d}) = slope * p^{e*d} + alpha held for
// every sampled e. d is a multiple of the multiplicative order of p modulo
// den(alpha), chosen so that p^d > |alpha|.
struct RootCertificate {
  MonomialIdeal j;
  unsigned d = 0;
  Rat slope;
  unsigned samples = 0;
};

struct ReportedRoot {
  Rat value;
  RootStatus status = RootStatus::unresolved;
  std::optional<RootCertificate> certificate;
  PAdicBranch branch;
};

struct RootReport {
  Int p;
  unsigned levels = 0;
  std::vector<ReportedRoot> roots;       // sorted ascending by value
  std::vector<PAdicBranch> unresolved;   // no periodic pattern in the window
  // Set when some level set came out empty (tree truncated); diagnostic only.
  std::optional<unsigned> empty_level;

  std::set<Rat> root_values() const;     // certified + periodic_uncertified
};

struct BsOptions {
  unsigned levels = 0;            // 0 = auto from depth_target and the window
  Int depth_target = 1'000'000;   // p^levels >= depth_target when auto
  std::size_t max_preperiod = 8;
  std::size_t max_period = 12;
  bool certify = true;
  unsigned certify_samples = 3;   // consecutive e values a certificate must match
  unsigned d_cap = 20;            // give up on denominators of larger order
  unsigned grid_scale = 1;
  Int chain_check_budget = 128;   // cross-check levels with e <= 2, r*p^e <= this
  int jobs = 1;
  NuEngineOptions engine;
};

// Multiples of ord_p(den(alpha)): the level spacing at which the digit
// pattern of alpha repeats. Requires gcd(den, p) = 1.
unsigned find_d(const Rat& alpha, const Int& p);

// Searches the witness grid for a certificate of alpha. alpha must be
// negative with denominator coprime to p. nullopt = no grid witness found.
std::optional<RootCertificate> certify_root(const MonomialIdeal& a, const Int& p,
                                            const Rat& alpha, const GridSpec& grid,
                                            unsigned samples, unsigned d_cap = 20,
                                            const NuEngineOptions& engine = {});

// Full pipeline: level jump sets for e = 1..levels, residue tree, period
// detection per branch, then certification of each periodic candidate.
RootReport bs_roots(const MonomialIdeal& a, const Int& p, const BsOptions& opts = {});

}  // namespace bsr

#pragma once

#include <optional>
#include <set>
#include <vector>

#include "bsr/bs_roots.hpp"
#include "bsr/monomial.hpp"
#include "bsr/nu.hpp"
#include "bsr/numeric.hpp"

namespace bsr {

// Exact law nu(a, j, q) = slope*q + intercept observed on the arithmetic
// progression q = q_start, q_start + m, ... The intercept of a genuine law is
// a root candidate.
struct AffineLaw {
  MonomialIdeal j;
  Int m = 1;        // progression modulus, q = 1 (mod m)
  Int q_start = 1;
  Rat slope;
  Rat intercept;
  unsigned samples = 0;  // fit samples the law matched (audits come on top)
};

// Fits on `samples` consecutive progression points; nullopt when the values
// refuse to sit on one affine line or the slope is not positive.
// q_start must be = 1 (mod m) and samples >= 5.
std::optional<AffineLaw> fit_affine_law(const MonomialIdeal& a, const MonomialIdeal& j,
                                        const Int& m, const Int& q_start,
                                        unsigned samples,
                                        const NuEngineOptions& engine = {});

// Progression moduli the sweep tries. The ideal argument is accepted for
// future denominator-driven refinement but the default policy ignores it and
// returns 1..m_max.
std::vector<Int> candidate_moduli(const MonomialIdeal& a, const Int& m_max = 60);

struct Char0Options {
  Int m_max = 60;
  Int q_min = 50;            // fits start at the first progression point > this
  unsigned fit_samples = 5;
  unsigned audit_samples = 3;  // fresh points every law must also match
  unsigned grid_scale = 1;
  bool check_grid_stability = false;  // rerun at scale+1 and compare
  int jobs = 1;
  NuEngineOptions engine;
};

struct Char0Root {
  Rat value;
  AffineLaw law;  // retained witness: smallest witness ideal, then smallest m
};

struct Char0Result {
  std::vector<Char0Root> roots;  // sorted ascending by value
  // Only set by check_grid_stability: true when enlarging the grid changed
  // the recovered set, i.e. the default grid was too small for this ideal.
  std::optional<bool> grid_limited;

  std::set<Rat> values() const;
};

// Sweeps (witness grid) x (moduli), keeps audited laws, and reports the
// distinct intercepts.
Char0Result char0_roots(const MonomialIdeal& a, const Char0Options& opts = {});

struct PrimeComparison {
  Int p;
  std::set<Rat> char_p_roots;
  std::set<Rat> char0_in_zp;          // char-0 roots with denominator coprime to p
  std::vector<Rat> missing_in_char_p; // full char-0 set minus char_p_roots
  std::vector<Rat> extra_in_char_p;   // char_p_roots minus full char-0 set
  bool matches = false;               // char_p_roots == char0_in_zp
};

struct ComparisonReport {
  Char0Result char0;
  std::vector<PrimeComparison> per_prime;
};

ComparisonReport compare_char_p(const MonomialIdeal& a, const std::vector<Int>& primes,
                                const Char0Options& char0_opts = {},
                                const BsOptions& bs_opts = {});

}  // namespace bsr

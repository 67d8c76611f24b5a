#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "bsr/frobenius.hpp"
#include "bsr/ilp.hpp"
#include "bsr/monomial.hpp"
#include "bsr/numeric.hpp"

namespace bsr {

// nu(a, j, q) = max { n >= 0 : a^n not contained in j^{[q]} }. Well defined
// exactly when a is nonzero and proper and j contains a in its radical; any
// integer q >= 1 is allowed, not only prime powers.
struct NuQuery {
  MonomialIdeal a;
  MonomialIdeal j;
  Int q;

  void validate() const;
};

struct NuEngineOptions {
  int jobs = 1;
  Int grid_enumeration_budget = 2'000'000;  // witness ideals per sweep
  IlpOptions ilp;
};

// Computed by ILP: j splits into pure-power components j_c with exponent
// vector b, and a^n lands in j_c^{[q]} exactly when every monomial of a^n
// does, giving nu = max over components of the packing optimum with caps
// q*b_i - 1. Exact for all q >= 1.
Int nu(const NuQuery& query, const NuEngineOptions& opts = {});

struct NuBruteOptions {
  // The scan is capped at r*q*max_exponent(j) + 1 steps; this budget keeps
  // the materialized powers of `a` from running away.
  Int step_budget = 100'000;
};

// Reference scan: multiplies out a^n and tests bracket membership until it
// first lands inside. Exponential cost; oracle for small inputs only.
Int nu_brute(const NuQuery& query, const NuBruteOptions& opts = {});

// Witness grid: all exponent vectors b with sum(b) <= degree_bound and
// b_i <= per_variable_bound[i], each standing for the pure-power ideal
// (x_i^{b_i + 1}). Entries are clamped to degree_bound by construction.
struct GridSpec {
  Int degree_bound;
  std::vector<Int> per_variable_bound;

  void validate(std::size_t dim) const;
  GridSpec scaled(unsigned factor) const;
};

// Default bound D*(r+1) where D is the largest generator degree of `a` and r
// its generator count: wide enough that every level-set value below r*p^e is
// realized by some grid witness.
GridSpec default_grid(const MonomialIdeal& a);

// The grid's exponent vectors in sweep order (ascending witness degree, then
// lex). Variables absent from every generator of `a` are pinned to 0: they
// cannot influence nu. Throws resource_error past `budget` entries.
std::vector<std::vector<Int>> grid_witnesses(const MonomialIdeal& a, const GridSpec& grid,
                                             const Int& budget = 2'000'000);

// The pure-power ideal (x_i^{b_i + 1} : all i) a grid entry stands for.
MonomialIdeal grid_witness_ideal(std::size_t dim, const std::vector<Int>& b);

// Level-e jump set computed through the grid: values nu(a, j_b, p^e) for all
// grid witnesses j_b, cut to [0, r*p^e).
std::set<Int> nu_set_grid(const MonomialIdeal& a, const PrimePower& q,
                          const GridSpec& grid, const NuEngineOptions& opts = {});

// Same sweep, but remembers for each value the first witness in sweep order
// (ascending witness degree, then lex) realizing it. Used by certification
// and the CLI's witness output.
std::map<Int, MonomialIdeal> nu_set_grid_witnessed(const MonomialIdeal& a,
                                                   const PrimePower& q,
                                                   const GridSpec& grid,
                                                   const NuEngineOptions& opts = {});

}  // namespace bsr

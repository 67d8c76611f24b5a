#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bsr/numeric.hpp"

namespace bsr {

// maximize sum(beta) over integer beta >= 0 subject to rows * beta <= caps,
// all row entries nonnegative. rows[i][j] is the exponent of variable i in
// generator j, caps[i] the level-scaled exponent bound of the witness ideal.
struct NuProblem {
  std::vector<std::vector<Int>> rows;
  std::vector<Int> caps;

  std::size_t num_constraints() const { return rows.size(); }
  std::size_t num_vars() const { return rows.empty() ? 0 : rows[0].size(); }

  // Shape and sign checks. Boundedness (every column has a positive entry)
  // is checked by the solvers, which name the offending generator.
  void validate() const;
};

struct IlpResult {
  Int value;
  std::vector<Int> witness;
};

struct IlpOptions {
  std::uint64_t node_budget = 2'000'000;  // branch-and-bound nodes
  std::uint64_t pivot_budget = 100'000;   // simplex pivots per relaxation
};

// Optimal value only (no witness). nullopt = infeasible (some cap < 0).
std::optional<Int> max_value(const NuProblem& problem, const IlpOptions& opts = {});

// Optimal value plus the lexicographically smallest optimal witness,
// obtained by fixing coordinates left to right with a binary search on the
// monotone question "does capping beta_j at v keep the optimum reachable".
std::optional<IlpResult> maximize(const NuProblem& problem, const IlpOptions& opts = {});

struct BruteForceOptions {
  Int per_variable_bound = 10'000;
  Int point_budget = 10'000'000;  // bound on the enumeration box size
};

// Reference oracle: enumerates the whole feasible box in ascending lex order
// and keeps strict improvements, which makes the reported witness the lex
// smallest optimum. Identical contract to maximize.
std::optional<IlpResult> brute_force_maximize(const NuProblem& problem,
                                              const BruteForceOptions& opts = {});

}  // namespace bsr

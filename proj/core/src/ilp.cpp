#include "bsr/ilp.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "bsr/errors.hpp"

namespace bsr {

void NuProblem::validate() const {
  if (rows.empty())
    throw precondition_error("NuProblem: at least one constraint row is required");
  if (caps.size() != rows.size())
    throw precondition_error("NuProblem: caps and rows must have equal length");
  std::size_t r = rows[0].size();
  if (r == 0) throw precondition_error("NuProblem: at least one variable is required");
  for (const auto& row : rows) {
    if (row.size() != r) throw precondition_error("NuProblem: ragged constraint matrix");
    for (const Int& v : row)
      if (v < 0) throw precondition_error("NuProblem: matrix entries must be nonnegative");
  }
}

namespace {

void check_bounded_columns(const NuProblem& p) {
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    bool positive = false;
    for (std::size_t i = 0; i < p.num_constraints() && !positive; ++i)
      positive = p.rows[i][j] > 0;
    if (!positive)
      throw precondition_error("NuProblem: generator " + std::to_string(j) +
                               " appears in no constraint, objective is unbounded");
  }
}

// ---- exact primal simplex --------------------------------------------------
//
// maximize sum(y) st M y <= d, y >= 0, with d >= 0 entrywise so the all-slack
// basis is feasible. Bland's rule, so termination needs no perturbation. The
// pivot budget is pure defense: callers fall back to a trivial bound if it is
// ever exhausted.

struct SimplexOutcome {
  bool ok = false;  // false = pivot budget exhausted (never unbounded here)
  Rat value;
  std::vector<Rat> solution;
};

SimplexOutcome simplex_max_sum(const std::vector<std::vector<Rat>>& m,
                               const std::vector<Rat>& d,
                               std::uint64_t pivot_budget) {
  const std::size_t rows = m.size();
  const std::size_t n = m.empty() ? 0 : m[0].size();
  const std::size_t total = n + rows;  // structural + slack

  std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(total, Rat(0)));
  std::vector<Rat> rhs(d);
  std::vector<Rat> zrow(total, Rat(0));
  Rat zval(0);
  std::vector<std::size_t> basis(rows);

  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = m[i][j];
    t[i][n + i] = 1;
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) zrow[j] = -1;

  for (std::uint64_t pivots = 0;; ++pivots) {
    if (pivots >= pivot_budget) return {};

    std::size_t enter = total;
    for (std::size_t j = 0; j < total; ++j)
      if (zrow[j] < 0) { enter = j; break; }
    if (enter == total) break;  // optimal

    std::size_t leave = rows;
    Rat best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = rhs[i] / t[i][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows) return {};  // unbounded; unreachable with box rows

    Rat piv = t[leave][enter];
    for (Rat& v : t[leave]) v /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (std::size_t j = 0; j < total; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    if (zrow[enter] != 0) {
      Rat f = zrow[enter];
      for (std::size_t j = 0; j < total; ++j)
        if (t[leave][j] != 0) zrow[j] -= f * t[leave][j];
      zval -= f * rhs[leave];
    }
    basis[leave] = enter;
  }

  SimplexOutcome out;
  out.ok = true;
  out.value = zval;
  out.solution.assign(n, Rat(0));
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < n) out.solution[basis[i]] = rhs[i];
  return out;
}

// ---- branch and bound -------------------------------------------------------

struct Box {
  std::vector<Int> lo, hi;
};

struct BBOutcome {
  bool feasible = false;
  Int value;
  std::vector<Int> witness;
};

Int sum_of(const std::vector<Int>& v) {
  Int s = 0;
  for (const Int& x : v) s += x;
  return s;
}

// Maximizes sum(beta) over the integer points of box cap {rows*beta <= caps}.
// `target`, when set, allows stopping as soon as that value is reached (used
// by probes that only ask whether the global optimum stays attainable).
BBOutcome bb_solve(const NuProblem& p, Box root, const Int* target,
                   const IlpOptions& opts) {
  const std::size_t n = p.num_constraints();
  const std::size_t r = p.num_vars();

  BBOutcome best;
  std::vector<Box> stack{std::move(root)};
  std::uint64_t nodes = 0;

  while (!stack.empty()) {
    if (target && best.feasible && best.value >= *target) break;
    if (++nodes > opts.node_budget)
      throw resource_error("ilp: branch and bound exceeded node budget of " +
                           std::to_string(opts.node_budget) + " nodes");

    Box box = std::move(stack.back());
    stack.pop_back();

    bool empty = false;
    for (std::size_t j = 0; j < r && !empty; ++j) empty = box.lo[j] > box.hi[j];
    if (empty) continue;

    // Residual caps at the lower corner; negative means the whole box is out.
    std::vector<Int> resid(n);
    bool infeasible = false;
    for (std::size_t i = 0; i < n && !infeasible; ++i) {
      Int used = 0;
      for (std::size_t j = 0; j < r; ++j)
        if (p.rows[i][j] != 0) used += p.rows[i][j] * box.lo[j];
      resid[i] = p.caps[i] - used;
      infeasible = resid[i] < 0;
    }
    if (infeasible) continue;

    // Single-row bound tightening: a_ij (beta_j - lo_j) <= resid_i.
    for (std::size_t j = 0; j < r && !empty; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (p.rows[i][j] <= 0) continue;
        Int cap = box.lo[j] + resid[i] / p.rows[i][j];
        if (cap < box.hi[j]) box.hi[j] = cap;
      }
      empty = box.lo[j] > box.hi[j];
    }
    if (empty) continue;

    // The lower corner is feasible: free incumbent.
    Int corner = sum_of(box.lo);
    if (!best.feasible || corner > best.value) {
      best.feasible = true;
      best.value = corner;
      best.witness = box.lo;
    }

    Int trivial = sum_of(box.hi);
    if (trivial <= best.value) continue;

    // LP relaxation on y = beta - lo, 0 <= y <= hi - lo, rows*y <= resid.
    std::vector<std::vector<Rat>> m;
    std::vector<Rat> d;
    m.reserve(n + r);
    d.reserve(n + r);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rat> row(r);
      bool nonzero = false;
      for (std::size_t j = 0; j < r; ++j) {
        row[j] = Rat(p.rows[i][j]);
        nonzero = nonzero || p.rows[i][j] != 0;
      }
      if (nonzero) {
        m.push_back(std::move(row));
        d.push_back(Rat(resid[i]));
      }
    }
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<Rat> row(r, Rat(0));
      row[j] = 1;
      m.push_back(std::move(row));
      d.push_back(Rat(Int(box.hi[j] - box.lo[j])));
    }

    SimplexOutcome lp = simplex_max_sum(m, d, opts.pivot_budget);
    Int lo_sum = sum_of(box.lo);
    Int node_bound = lp.ok ? Int(floor_rat(lp.value) + lo_sum) : trivial;
    if (node_bound <= best.value) continue;

    std::size_t frac = r;
    if (lp.ok) {
      for (std::size_t j = 0; j < r; ++j)
        if (!is_integer(lp.solution[j])) { frac = j; break; }
    }

    if (lp.ok && frac == r) {
      // Integral relaxation: the node is solved outright.
      Int value = 0;
      std::vector<Int> w(r);
      for (std::size_t j = 0; j < r; ++j) {
        w[j] = box.lo[j] + numerator(lp.solution[j]);
        value += w[j];
      }
      if (!best.feasible || value > best.value) {
        best.feasible = true;
        best.value = value;
        best.witness = std::move(w);
      }
      continue;
    }

    // Branch on the first fractional coordinate; explore the upper side
    // first (stack is LIFO) since large values make better incumbents. When
    // the relaxation hit its pivot budget, split the first open coordinate
    // at its midpoint instead (one exists: the trivial bound beat `best`).
    std::size_t j = frac;
    Int split;
    if (lp.ok) {
      split = box.lo[j] + floor_rat(lp.solution[j]);
    } else {
      j = 0;
      while (box.lo[j] == box.hi[j]) ++j;
      split = floor_div(box.lo[j] + box.hi[j], 2);
    }
    Box down = box;
    down.hi[j] = split;
    box.lo[j] = split + 1;
    stack.push_back(std::move(down));
    stack.push_back(std::move(box));
  }

  return best;
}

Box initial_box(const NuProblem& p) {
  const std::size_t r = p.num_vars();
  Box box{std::vector<Int>(r, Int(0)), std::vector<Int>(r, Int(0))};
  for (std::size_t j = 0; j < r; ++j) {
    bool bounded = false;
    for (std::size_t i = 0; i < p.num_constraints(); ++i) {
      if (p.rows[i][j] <= 0) continue;
      Int cap = p.caps[i] / p.rows[i][j];
      if (!bounded || cap < box.hi[j]) box.hi[j] = cap;
      bounded = true;
    }
  }
  return box;
}

bool any_negative_cap(const NuProblem& p) {
  return std::any_of(p.caps.begin(), p.caps.end(), [](const Int& c) { return c < 0; });
}

}  // namespace

std::optional<Int> max_value(const NuProblem& problem, const IlpOptions& opts) {
  problem.validate();
  check_bounded_columns(problem);
  if (any_negative_cap(problem)) return std::nullopt;
  BBOutcome out = bb_solve(problem, initial_box(problem), nullptr, opts);
  return out.value;  // zero is always feasible here, so `out` is populated
}

std::optional<IlpResult> maximize(const NuProblem& problem, const IlpOptions& opts) {
  problem.validate();
  check_bounded_columns(problem);
  if (any_negative_cap(problem)) return std::nullopt;

  const std::size_t r = problem.num_vars();
  Box box = initial_box(problem);
  BBOutcome first = bb_solve(problem, box, nullptr, opts);
  const Int v = first.value;
  std::vector<Int> witness = std::move(first.witness);

  // Fix coordinates left to right at the least value keeping v attainable.
  // Attainability with hi_j = t is monotone in t, and `witness` always
  // attains v inside the current box, so it supplies the upper endpoint.
  for (std::size_t j = 0; j < r; ++j) {
    Int lo = box.lo[j], hi = witness[j];
    while (lo < hi) {
      Int mid = floor_div(lo + hi, 2);
      Box probe = box;
      probe.hi[j] = mid;
      BBOutcome out = bb_solve(problem, std::move(probe), &v, opts);
      if (out.feasible && out.value >= v) {
        witness = std::move(out.witness);
        hi = witness[j];
      } else {
        lo = mid + 1;
      }
    }
    box.lo[j] = lo;
    box.hi[j] = lo;
  }

  return IlpResult{v, std::move(witness)};
}

namespace {

// Recursive lex-ascending scan with partial row sums; rows are nonnegative,
// so a violated partial sum prunes the whole subtree.
template <typename T>
struct BruteScan {
  const std::vector<std::vector<T>>& rows;
  const std::vector<T>& caps;
  const std::vector<T>& bounds;
  std::vector<T> point, partial;
  std::vector<T> best_point;
  T best_value{0};
  bool found = false;

  void run(std::size_t j, const T& value_so_far) {
    if (j == bounds.size()) {
      if (!found || value_so_far > best_value) {
        found = true;
        best_value = value_so_far;
        best_point = point;
      }
      return;
    }
    for (T v = 0;; ++v) {
      if (v > 0) {
        bool ok = true;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          partial[i] += rows[i][j];
          if (partial[i] > caps[i]) ok = false;
        }
        if (!ok || v > bounds[j]) {  // undo and stop this level
          for (std::size_t i = 0; i < rows.size(); ++i) partial[i] -= rows[i][j] * v;
          point[j] = 0;
          return;
        }
      }
      point[j] = v;
      run(j + 1, value_so_far + v);
    }
  }
};

template <typename T>
IlpResult brute_scan_typed(const std::vector<std::vector<T>>& rows,
                           const std::vector<T>& caps, const std::vector<T>& bounds) {
  BruteScan<T> scan{rows, caps, bounds,
                    std::vector<T>(bounds.size(), T(0)),
                    std::vector<T>(rows.size(), T(0)),
                    {}};
  scan.run(0, T(0));
  // The zero point is always visited, so `found` holds.
  IlpResult res;
  res.value = Int(scan.best_value);
  res.witness.reserve(bounds.size());
  for (const T& v : scan.best_point) res.witness.emplace_back(v);
  return res;
}

}  // namespace

std::optional<IlpResult> brute_force_maximize(const NuProblem& problem,
                                              const BruteForceOptions& opts) {
  problem.validate();
  check_bounded_columns(problem);
  if (any_negative_cap(problem)) return std::nullopt;

  Box box = initial_box(problem);
  Int points = 1;
  for (std::size_t j = 0; j < problem.num_vars(); ++j) {
    if (box.hi[j] > opts.per_variable_bound)
      throw resource_error("brute_force_maximize: bound " + box.hi[j].str() +
                           " for generator " + std::to_string(j) +
                           " exceeds per-variable budget " +
                           opts.per_variable_bound.str());
    points *= box.hi[j] + 1;
    if (points > opts.point_budget)
      throw resource_error("brute_force_maximize: enumeration box exceeds budget of " +
                           opts.point_budget.str() + " points");
  }

  // int64 fast path: with entries and caps below 2^40 no partial sum can
  // overflow (sums of at most r terms bounded by caps themselves).
  bool small = true;
  const Int lim = Int(1) << 40;
  for (const auto& row : problem.rows)
    for (const Int& v : row) small = small && v < lim;
  for (const Int& c : problem.caps) small = small && c < lim;

  if (small) {
    auto narrow = [](const Int& v) { return static_cast<std::int64_t>(v); };
    std::vector<std::vector<std::int64_t>> rows(problem.num_constraints());
    for (std::size_t i = 0; i < problem.num_constraints(); ++i)
      for (const Int& v : problem.rows[i]) rows[i].push_back(narrow(v));
    std::vector<std::int64_t> caps, bounds;
    for (const Int& c : problem.caps) caps.push_back(narrow(c));
    for (const Int& b : box.hi) bounds.push_back(narrow(b));
    return brute_scan_typed<std::int64_t>(rows, caps, bounds);
  }
  return brute_scan_typed<Int>(problem.rows, problem.caps, box.hi);
}

}  // namespace bsr

#include "bsr/nu.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>

#include "bsr/errors.hpp"
#include "bsr/ideal_io.hpp"
#include "bsr/parallel.hpp"

namespace bsr {

void NuQuery::validate() const {
  if (a.dim() != j.dim())
    throw dimension_error("nu: a and j live in different variable counts");
  if (q < 1) throw precondition_error("nu: q must be >= 1");
  if (a.is_zero() || a.is_unit())
    throw precondition_error("nu: a must be nonzero and proper");
  if (j.is_unit()) throw precondition_error("nu: j must be proper");
  if (!radical_contains(j, a))
    throw precondition_error("J does not contain a in its radical");
}

namespace {

// Decompositions are reused across levels and fit samples, so they are worth
// memoizing. Keyed by the canonical rendering; guarded for parallel sweeps.
const std::vector<MonomialIdeal>& cached_decomposition(const MonomialIdeal& j) {
  static std::map<std::string, std::vector<MonomialIdeal>> cache;
  static std::shared_mutex mutex;
  std::string key = std::to_string(j.dim()) + "|" + render_ideal(j);
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<MonomialIdeal> comps = irreducible_decomposition(j);
  std::unique_lock lock(mutex);
  return cache.emplace(std::move(key), std::move(comps)).first->second;
}

// Rows of the packing problem for one pure-power component (x_i^{b_i}):
// sum_j exps(f_j)_i * beta_j <= q*b_i - 1 for each i in the support.
NuProblem component_problem(const MonomialIdeal& a, const MonomialIdeal& comp,
                            const Int& q) {
  NuProblem p;
  for (const Monomial& g : comp.generators()) {
    std::size_t i = g.support().front();
    std::vector<Int> row;
    row.reserve(a.num_generators());
    for (const Monomial& f : a.generators()) row.push_back(f[i]);
    p.rows.push_back(std::move(row));
    p.caps.push_back(q * g[i] - 1);
  }
  return p;
}

Int nu_of_components(const MonomialIdeal& a, const std::vector<MonomialIdeal>& comps,
                     const Int& q, const IlpOptions& ilp) {
  std::optional<Int> best;
  for (const MonomialIdeal& comp : comps) {
    std::optional<Int> v = max_value(component_problem(a, comp, q), ilp);
    if (v && (!best || *v > *best)) best = *v;
  }
  // Every component's zero point is feasible (caps q*b_i - 1 >= 0), so
  // `best` is always populated here.
  return *best;
}

}  // namespace

Int nu(const NuQuery& query, const NuEngineOptions& opts) {
  query.validate();
  return nu_of_components(query.a, cached_decomposition(query.j), query.q, opts.ilp);
}

Int nu_brute(const NuQuery& query, const NuBruteOptions& opts) {
  query.validate();
  Int bound = Int(query.j.num_generators()) * query.q * query.j.max_exponent() + 1;
  if (bound > opts.step_budget)
    throw resource_error("nu_brute: scan bound " + bound.str() +
                         " exceeds step budget " + opts.step_budget.str());
  MonomialIdeal bracket = bracket_power(query.j, query.q);
  MonomialIdeal cur = MonomialIdeal::whole_ring(query.a.dim());
  for (Int n = 0; n <= bound; ++n) {
    if (bracket.contains(cur)) return n - 1;  // n = 0 never lands here: j proper
    cur = multiply(cur, query.a);
  }
  throw resource_error("nu_brute: no containment within " + bound.str() +
                       " steps; query outside brute-force reach");
}

void GridSpec::validate(std::size_t dim) const {
  if (degree_bound < 0) throw precondition_error("grid: degree bound must be >= 0");
  if (per_variable_bound.size() != dim)
    throw dimension_error("grid: per-variable bounds must match the variable count");
  for (const Int& b : per_variable_bound)
    if (b < 0) throw precondition_error("grid: per-variable bounds must be >= 0");
}

GridSpec GridSpec::scaled(unsigned factor) const {
  if (factor < 1) throw precondition_error("grid: scale factor must be >= 1");
  GridSpec g = *this;
  g.degree_bound *= factor;
  for (Int& b : g.per_variable_bound) b *= factor;
  return g;
}

GridSpec default_grid(const MonomialIdeal& a) {
  if (a.is_zero() || a.is_unit())
    throw precondition_error("default_grid: ideal must be nonzero and proper");
  Int bound = a.max_generator_degree() * (Int(a.num_generators()) + 1);
  return GridSpec{bound, std::vector<Int>(a.dim(), bound)};
}

std::vector<std::vector<Int>> grid_witnesses(const MonomialIdeal& a, const GridSpec& grid,
                                             const Int& budget) {
  const std::size_t n = a.dim();
  grid.validate(n);
  std::vector<bool> used(n, false);
  for (const Monomial& f : a.generators())
    for (std::size_t i = 0; i < n; ++i) used[i] = used[i] || f[i] > 0;

  std::vector<std::vector<Int>> out;
  std::vector<Int> b(n, Int(0));
  Int count = 0;

  auto step = [&](auto&& self, std::size_t i, const Int& left) -> void {
    if (i == n) {
      if (++count > budget)
        throw resource_error("grid_witnesses: witness grid exceeds enumeration budget of " +
                             budget.str() + " ideals");
      out.push_back(b);
      return;
    }
    if (!used[i]) {
      self(self, i + 1, left);
      return;
    }
    Int top = grid.per_variable_bound[i] < left ? grid.per_variable_bound[i] : left;
    for (b[i] = 0; b[i] <= top; ++b[i]) self(self, i + 1, Int(left - b[i]));
    b[i] = 0;
  };
  step(step, 0, grid.degree_bound);

  std::sort(out.begin(), out.end(), [](const std::vector<Int>& x, const std::vector<Int>& y) {
    Int dx = 0, dy = 0;
    for (const Int& v : x) dx += v;
    for (const Int& v : y) dy += v;
    if (dx != dy) return dx < dy;
    return x < y;
  });
  return out;
}

MonomialIdeal grid_witness_ideal(std::size_t dim, const std::vector<Int>& b) {
  std::vector<Monomial> gens;
  gens.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Int> e(dim, Int(0));
    e[i] = b[i] + 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(dim, std::move(gens));
}

namespace {

// Shared core of the two sweep flavors: per-witness nu values in grid order.
std::vector<std::pair<std::vector<Int>, Int>> sweep_grid(const MonomialIdeal& a,
                                                         const PrimePower& q,
                                                         const GridSpec& grid,
                                                         const NuEngineOptions& opts) {
  if (a.is_zero() || a.is_unit())
    throw precondition_error("nu_set_grid: ideal must be nonzero and proper");
  grid.validate(a.dim());

  std::vector<std::vector<Int>> bs = grid_witnesses(a, grid, opts.grid_enumeration_budget);
  if (bs.empty()) throw precondition_error("nu_set_grid: empty witness grid");

  // Rows of the packing problem are independent of b; only caps vary.
  std::vector<std::size_t> used_vars;
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::vector<Int> row;
    row.reserve(a.num_generators());
    bool nonzero = false;
    for (const Monomial& f : a.generators()) {
      row.push_back(f[i]);
      nonzero = nonzero || f[i] > 0;
    }
    if (nonzero) {
      rows.push_back(std::move(row));
      used_vars.push_back(i);
    }
  }

  std::vector<std::pair<std::vector<Int>, Int>> results(bs.size());
  parallel_for(bs.size(), opts.jobs, [&](std::size_t k) {
    const std::vector<Int>& b = bs[k];
    NuProblem p;
    p.rows = rows;
    p.caps.reserve(used_vars.size());
    for (std::size_t i : used_vars) p.caps.push_back(q.value() * (b[i] + 1) - 1);
    std::optional<Int> v = max_value(p, opts.ilp);
    results[k] = {b, *v};
  });
  return results;
}

}  // namespace

std::set<Int> nu_set_grid(const MonomialIdeal& a, const PrimePower& q,
                          const GridSpec& grid, const NuEngineOptions& opts) {
  Int cut = Int(a.num_generators()) * q.value();
  std::set<Int> values;
  for (auto& [b, v] : sweep_grid(a, q, grid, opts))
    if (v < cut) values.insert(v);
  return values;
}

std::map<Int, MonomialIdeal> nu_set_grid_witnessed(const MonomialIdeal& a,
                                                   const PrimePower& q,
                                                   const GridSpec& grid,
                                                   const NuEngineOptions& opts) {
  Int cut = Int(a.num_generators()) * q.value();
  std::map<Int, MonomialIdeal> out;
  for (auto& [b, v] : sweep_grid(a, q, grid, opts)) {
    if (v >= cut) continue;
    // Sweep order is (degree, lex) ascending, so first hit = smallest witness.
    if (!out.count(v)) out.emplace(v, grid_witness_ideal(a.dim(), b));
  }
  return out;
}

}  // namespace bsr

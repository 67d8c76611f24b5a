#include "bsr/char_zero.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "bsr/errors.hpp"
#include "bsr/parallel.hpp"

namespace bsr {

std::optional<AffineLaw> fit_affine_law(const MonomialIdeal& a, const MonomialIdeal& j,
                                        const Int& m, const Int& q_start,
                                        unsigned samples, const NuEngineOptions& engine) {
  if (m < 1) throw precondition_error("fit_affine_law: modulus must be >= 1");
  if (samples < 5) throw precondition_error("fit_affine_law: need at least five samples");
  if (q_start < 1 || (q_start - 1) % m != 0)
    throw precondition_error("fit_affine_law: q_start must be = 1 (mod m)");
  NuQuery first{a, j, q_start};
  first.validate();

  std::vector<Int> nus;
  nus.reserve(samples);
  for (unsigned i = 0; i < samples; ++i)
    nus.push_back(nu(NuQuery{a, j, q_start + Int(i) * m}, engine));

  Rat slope = Rat(nus[1] - nus[0], m);
  if (slope <= 0) return std::nullopt;
  Rat intercept = Rat(nus[0]) - slope * Rat(q_start);
  for (unsigned i = 2; i < samples; ++i)
    if (Rat(nus[i]) != slope * Rat(q_start + Int(i) * m) + intercept) return std::nullopt;

  return AffineLaw{j, m, q_start, std::move(slope), std::move(intercept), samples};
}

std::vector<Int> candidate_moduli(const MonomialIdeal&, const Int& m_max) {
  if (m_max < 1) throw precondition_error("candidate_moduli: m_max must be >= 1");
  std::vector<Int> out;
  for (Int m = 1; m <= m_max; ++m) out.push_back(m);
  return out;
}

std::set<Rat> Char0Result::values() const {
  std::set<Rat> out;
  for (const Char0Root& r : roots) out.insert(r.value);
  return out;
}

namespace {

std::vector<Char0Root> sweep_once(const MonomialIdeal& a, const GridSpec& grid,
                                  const Char0Options& opts) {
  std::vector<std::vector<Int>> bs = grid_witnesses(a, grid, opts.engine.grid_enumeration_budget);
  std::vector<Int> moduli = candidate_moduli(a, opts.m_max);

  // One slot per witness keeps the merge deterministic under --jobs.
  std::vector<std::vector<Char0Root>> slots(bs.size());
  parallel_for(bs.size(), opts.jobs, [&](std::size_t k) {
    MonomialIdeal j = grid_witness_ideal(a.dim(), bs[k]);
    for (const Int& m : moduli) {
      // First progression point 1 (mod m) strictly beyond q_min.
      Int q_start = 1 + m * ceil_div(opts.q_min, m);
      std::optional<AffineLaw> law =
          fit_affine_law(a, j, m, q_start, opts.fit_samples, opts.engine);
      if (!law) continue;
      bool audited = true;
      for (unsigned i = 0; i < opts.audit_samples && audited; ++i) {
        Int q = q_start + Int(opts.fit_samples + i) * m;
        audited = Rat(nu(NuQuery{a, j, q}, opts.engine)) ==
                  law->slope * Rat(q) + law->intercept;
      }
      if (audited) slots[k].push_back(Char0Root{law->intercept, std::move(*law)});
    }
  });

  // Deduplicate by intercept. Slots arrive in sweep order (witness degree,
  // then lex) and moduli ascending inside a slot, so the first law seen for
  // a value is the preferred witness.
  std::map<Rat, Char0Root> by_value;
  for (std::vector<Char0Root>& slot : slots)
    for (Char0Root& root : slot)
      by_value.try_emplace(root.value, std::move(root));

  std::vector<Char0Root> out;
  out.reserve(by_value.size());
  for (auto& [value, root] : by_value) out.push_back(std::move(root));
  return out;  // std::map iterates ascending by value
}

}  // namespace

Char0Result char0_roots(const MonomialIdeal& a, const Char0Options& opts) {
  if (a.is_zero() || a.is_unit())
    throw precondition_error("char0_roots: ideal must be nonzero and proper");
  if (opts.q_min < 1) throw precondition_error("char0_roots: q_min must be >= 1");

  GridSpec grid = default_grid(a).scaled(opts.grid_scale);
  Char0Result result;
  result.roots = sweep_once(a, grid, opts);

  if (opts.check_grid_stability) {
    GridSpec bigger = default_grid(a).scaled(opts.grid_scale + 1);
    std::vector<Char0Root> wide = sweep_once(a, bigger, opts);
    std::set<Rat> narrow_set, wide_set;
    for (const Char0Root& r : result.roots) narrow_set.insert(r.value);
    for (const Char0Root& r : wide) wide_set.insert(r.value);
    result.grid_limited = narrow_set != wide_set;
    if (*result.grid_limited) result.roots = std::move(wide);
  }
  return result;
}

ComparisonReport compare_char_p(const MonomialIdeal& a, const std::vector<Int>& primes,
                                const Char0Options& char0_opts, const BsOptions& bs_opts) {
  ComparisonReport report;
  report.char0 = char0_roots(a, char0_opts);

  std::set<Rat> char0_values = report.char0.values();
  for (const Int& p : primes) {
    PrimeComparison cmp;
    cmp.p = p;
    cmp.char_p_roots = bs_roots(a, p, bs_opts).root_values();
    for (const Rat& root : char0_values)
      if (denominator(root) % p != 0) cmp.char0_in_zp.insert(root);
    // Differences are against the full char-0 set: roots outside Z_(p) are
    // structurally invisible in char p and show up as "missing".
    std::set_difference(char0_values.begin(), char0_values.end(),
                        cmp.char_p_roots.begin(), cmp.char_p_roots.end(),
                        std::back_inserter(cmp.missing_in_char_p));
    std::set_difference(cmp.char_p_roots.begin(), cmp.char_p_roots.end(),
                        char0_values.begin(), char0_values.end(),
                        std::back_inserter(cmp.extra_in_char_p));
    cmp.matches = cmp.char_p_roots == cmp.char0_in_zp;
    report.per_prime.push_back(std::move(cmp));
  }
  return report;
}

}  // namespace bsr

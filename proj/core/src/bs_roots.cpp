#include "bsr/bs_roots.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "bsr/errors.hpp"
#include "bsr/frobenius.hpp"

namespace bsr {

std::set<Rat> RootReport::root_values() const {
  std::set<Rat> out;
  for (const ReportedRoot& r : roots) out.insert(r.value);
  return out;
}

unsigned find_d(const Rat& alpha, const Int& p) {
  if (!is_prime(p)) throw precondition_error("find_d: p must be prime");
  Int den = denominator(alpha);
  if (den % p == 0) throw precondition_error("find_d: denominator divisible by p");
  return static_cast<unsigned>(multiplicative_order(p, den));
}

std::optional<RootCertificate> certify_root(const MonomialIdeal& a, const Int& p,
                                            const Rat& alpha, const GridSpec& grid,
                                            unsigned samples, unsigned d_cap,
                                            const NuEngineOptions& engine) {
  if (alpha >= 0) throw precondition_error("certify_root: alpha must be negative");
  if (samples < 2) throw precondition_error("certify_root: need at least two samples");

  unsigned d0 = find_d(alpha, p);
  if (d0 > d_cap) return std::nullopt;
  // Grow d (keeping divisibility by d0) until p^d clears |alpha|, so that
  // the affine law has room to hold with a nonnegative nu at e = 1.
  const Rat abs_alpha = -alpha;
  unsigned d = d0;
  while (Rat(pow_int(p, d)) <= abs_alpha) {
    if (d > d_cap) return std::nullopt;
    d += d0;
  }
  if (d > d_cap) return std::nullopt;

  std::vector<Int> qs;
  for (unsigned e = 1; e <= samples; ++e) qs.push_back(pow_int(p, e * d));

  // Witnesses in sweep order; a full-support pure-power ideal always
  // contains `a` in its radical, so every grid entry is admissible.
  for (const std::vector<Int>& b : grid_witnesses(a, grid)) {
    MonomialIdeal j = grid_witness_ideal(a.dim(), b);
    std::vector<Int> nus;
    nus.reserve(samples);
    for (const Int& q : qs) nus.push_back(nu(NuQuery{a, j, q}, engine));
    Rat slope = Rat(nus[1] - nus[0], qs[1] - qs[0]);
    if (slope <= 0) continue;
    bool law_holds = true;
    for (unsigned e = 0; e < samples && law_holds; ++e)
      law_holds = Rat(nus[e]) == slope * Rat(qs[e]) + alpha;
    if (law_holds) return RootCertificate{j, d, slope, samples};
  }
  return std::nullopt;
}

namespace {

unsigned default_levels(const Int& p, const BsOptions& opts) {
  unsigned e = 1;
  Int v = p;
  while (v < opts.depth_target) {
    v *= p;
    ++e;
  }
  unsigned window = static_cast<unsigned>(opts.max_preperiod + 3 * opts.max_period);
  return std::max(e, window);
}

}  // namespace

RootReport bs_roots(const MonomialIdeal& a, const Int& p, const BsOptions& opts) {
  if (a.is_zero() || a.is_unit())
    throw precondition_error("bs_roots: ideal must be nonzero and proper");
  if (!is_prime(p)) throw precondition_error("bs_roots: p must be prime");

  const unsigned levels = opts.levels ? opts.levels : default_levels(p, opts);
  GridSpec grid = default_grid(a).scaled(opts.grid_scale);

  RootReport report;
  report.p = p;
  report.levels = levels;

  std::vector<std::set<Int>> level_sets;
  level_sets.reserve(levels);
  for (unsigned e = 1; e <= levels; ++e) {
    PrimePower q(p, e);
    std::set<Int> s = nu_set_grid(a, q, grid, opts.engine);
    // Independent recomputation by Cartier chain on the cheap levels. A
    // mismatch means a bug in one of the two engines, never bad input.
    if (e <= 2 && Int(a.num_generators()) * q.value() <= opts.chain_check_budget) {
      if (nu_set_chain(a, q) != s)
        throw std::logic_error("bs_roots: grid and chain level sets disagree at e=" +
                               std::to_string(e));
    }
    if (s.empty() && !report.empty_level) report.empty_level = e;
    level_sets.push_back(std::move(s));
  }

  ResidueTreeResult tree = residue_tree(p, level_sets);
  if (tree.empty_level && !report.empty_level)
    report.empty_level = static_cast<unsigned>(*tree.empty_level);

  // Clamp the detection window when the user forces fewer levels than the
  // defaults assume; anything that does not fit is reported unresolved.
  std::size_t k_eff = std::min<std::size_t>(opts.max_preperiod, levels >= 3 ? levels - 3 : 0);
  std::size_t d_eff = std::min<std::size_t>(opts.max_period,
                                            std::max<std::size_t>(1, (levels - k_eff) / 3));
  const bool window_fits = levels >= k_eff + 3 * d_eff;

  for (PAdicBranch& branch : tree.branches) {
    std::optional<PeriodicExpansion> pattern =
        window_fits ? detect_period(branch, k_eff, d_eff) : std::nullopt;
    if (!pattern) {
      report.unresolved.push_back(std::move(branch));
      continue;
    }
    Rat value = rational_from_expansion(*pattern);
    if (value >= 0) {
      // Candidate roots live in the negative rationals; a nonnegative
      // pattern is a truncation artifact, not a root.
      report.unresolved.push_back(std::move(branch));
      continue;
    }
    ReportedRoot root;
    root.value = value;
    root.branch = std::move(branch);
    if (opts.certify) {
      root.certificate = certify_root(a, p, value, grid, opts.certify_samples,
                                      opts.d_cap, opts.engine);
      root.status = root.certificate ? RootStatus::certified
                                     : RootStatus::periodic_uncertified;
    } else {
      root.status = RootStatus::periodic_uncertified;
    }
    report.roots.push_back(std::move(root));
  }

  std::sort(report.roots.begin(), report.roots.end(),
            [](const ReportedRoot& x, const ReportedRoot& y) { return x.value < y.value; });
  return report;
}

}  // namespace bsr

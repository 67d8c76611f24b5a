#include "bsr/padic.hpp"

#include <algorithm>
#include <utility>

#include "bsr/errors.hpp"

namespace bsr {

Int PAdicBranch::residue() const {
  Int r = 0;
  for (std::size_t i = digits.size(); i-- > 0;) r = r * p + digits[i];
  return r;
}

ResidueTreeResult residue_tree(const Int& p, const std::vector<std::set<Int>>& level_sets) {
  if (!is_prime(p)) throw precondition_error("residue_tree: p must be prime");
  if (level_sets.empty()) throw precondition_error("residue_tree: need at least one level");

  // alive = residues mod p^e compatible with every level so far.
  std::vector<Int> alive;
  Int pe = 1;
  for (std::size_t e = 0; e < level_sets.size(); ++e) {
    if (level_sets[e].empty()) return {{}, e + 1};
    Int prev_pe = pe;
    pe *= p;
    std::set<Int> residues;
    for (const Int& n : level_sets[e]) residues.insert(((n % pe) + pe) % pe);
    std::vector<Int> next;
    if (e == 0) {
      next.assign(residues.begin(), residues.end());
    } else {
      for (const Int& r : residues)
        if (std::binary_search(alive.begin(), alive.end(), r % prev_pe)) next.push_back(r);
    }
    if (next.empty()) return {{}, std::nullopt};  // consistent levels, empty meet
    alive = std::move(next);
  }

  ResidueTreeResult out;
  out.branches.reserve(alive.size());
  for (const Int& r : alive) {
    PAdicBranch b{p, {}};
    b.digits.reserve(level_sets.size());
    Int v = r;
    for (std::size_t i = 0; i < level_sets.size(); ++i) {
      b.digits.push_back(v % p);
      v /= p;
    }
    out.branches.push_back(std::move(b));
  }
  return out;
}

std::optional<PeriodicExpansion> detect_period(const PAdicBranch& branch,
                                               std::size_t max_preperiod,
                                               std::size_t max_period) {
  if (max_period < 1) throw precondition_error("detect_period: max_period must be >= 1");
  const std::vector<Int>& a = branch.digits;
  if (a.size() < max_preperiod + 3 * max_period)
    throw precondition_error("detect_period: branch provides " + std::to_string(a.size()) +
                             " digits, need at least " +
                             std::to_string(max_preperiod + 3 * max_period));
  for (std::size_t d = 1; d <= max_period; ++d) {
    for (std::size_t k = 0; k <= max_preperiod; ++k) {
      if (a.size() < k + 3 * d) break;  // three full repetitions must fit
      bool match = true;
      for (std::size_t i = k; i + d < a.size() && match; ++i)
        match = a[i] == a[i + d];
      if (!match) continue;
      PeriodicExpansion e{branch.p, {a.begin(), a.begin() + k},
                          {a.begin() + k, a.begin() + k + d}};
      return e;
    }
  }
  return std::nullopt;
}

Rat rational_from_expansion(const PeriodicExpansion& expansion) {
  const Int& p = expansion.p;
  if (p < 2) throw precondition_error("rational_from_expansion: p must be >= 2");
  if (expansion.period.empty())
    throw precondition_error("rational_from_expansion: period must be nonempty");
  for (const Int& d : expansion.preperiod)
    if (d < 0 || d >= p) throw precondition_error("rational_from_expansion: digit out of range");
  for (const Int& d : expansion.period)
    if (d < 0 || d >= p) throw precondition_error("rational_from_expansion: digit out of range");

  Int head = 0, pk = 1;
  for (const Int& d : expansion.preperiod) {
    head += d * pk;
    pk *= p;
  }
  Int v = 0, pd = 1;
  for (const Int& d : expansion.period) {
    v += d * pd;
    pd *= p;
  }
  // head + p^k * v * (1 + p^d + p^{2d} + ...) = head + p^k * v / (1 - p^d).
  // cpp_rational insists on a positive denominator, so use -(p^d - 1).
  return Rat(head) - Rat(Int(pk * v), Int(pd - 1));
}

PAdicBranch digits_of_rational(const Rat& x, const Int& p, std::size_t e) {
  if (!is_prime(p)) throw precondition_error("digits_of_rational: p must be prime");
  Int den = denominator(x);
  if (den % p == 0) throw precondition_error("digits_of_rational: not in Z_(p)");
  PAdicBranch out{p, {}};
  out.digits.reserve(e);
  Int num = numerator(x);
  for (std::size_t i = 0; i < e; ++i) {
    // digit = num/den mod p; subtract and divide exactly to step forward.
    Int digit = (num * mod_inverse(den, p)) % p;
    if (digit < 0) digit += p;
    out.digits.push_back(digit);
    num = (num - digit * den) / p;  // exact: num = digit*den (mod p)
  }
  return out;
}

}  // namespace bsr

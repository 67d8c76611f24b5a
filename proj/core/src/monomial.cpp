#include "bsr/monomial.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "bsr/errors.hpp"

namespace bsr {

namespace {

void check_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b)
    throw dimension_error(std::string(op) + ": operands have " + std::to_string(a) +
                          " and " + std::to_string(b) + " variables");
}

}  // namespace

Monomial::Monomial(std::vector<Int> exponents) : exps_(std::move(exponents)) {
  for (const Int& e : exps_)
    if (e < 0) throw precondition_error("monomial exponents must be nonnegative");
}

Monomial Monomial::unit(std::size_t dim) {
  return Monomial(std::vector<Int>(dim, Int(0)));
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](const Int& e) { return e == 0; });
}

Int Monomial::total_degree() const {
  Int d = 0;
  for (const Int& e : exps_) d += e;
  return d;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) s.push_back(i);
  return s;
}

bool Monomial::divides(const Monomial& m) const {
  check_same_dim(dim(), m.dim(), "divides");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > m.exps_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  check_same_dim(dim(), other.dim(), "times");
  std::vector<Int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same_dim(dim(), other.dim(), "lcm");
  std::vector<Int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (other.exps_[i] > e[i]) e[i] = other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::scaled(const Int& factor) const {
  if (factor < 1) throw precondition_error("scaled: factor must be >= 1");
  std::vector<Int> e(exps_);
  for (Int& x : e) x *= factor;
  return Monomial(std::move(e));
}

Monomial Monomial::quotient_floor(const Int& divisor) const {
  if (divisor < 1) throw precondition_error("quotient_floor: divisor must be >= 1");
  std::vector<Int> e(exps_);
  for (Int& x : e) x /= divisor;  // entries are nonnegative, truncation = floor
  return Monomial(std::move(e));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  check_same_dim(dim(), other.dim(), "compare");
  Int da = total_degree(), db = other.total_degree();
  if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != other.exps_[i])
      return exps_[i] < other.exps_[i] ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

// Sorts, dedupes, and drops dominated generators. Sorting by degree first
// means a potential proper divisor always precedes its multiple, so one
// forward pass suffices and equigenerated inputs cost only the sort.
std::vector<Monomial> reduce_to_antichain(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  std::vector<Int> kept_deg;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    Int dg = g.total_degree();
    bool dominated = false;
    for (std::size_t i = 0; i < kept.size() && kept_deg[i] < dg; ++i) {
      if (kept[i].divides(g)) { dominated = true; break; }
    }
    if (!dominated) {
      kept.push_back(std::move(g));
      kept_deg.push_back(std::move(dg));
    }
  }
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t dim, std::vector<Monomial> generators)
    : dim_(dim) {
  for (const Monomial& g : generators)
    check_same_dim(g.dim(), dim, "ideal construction");
  for (const Monomial& g : generators) {
    if (g.is_unit()) {  // whole ring swallows everything else
      gens_ = {Monomial::unit(dim)};
      return;
    }
  }
  gens_ = reduce_to_antichain(std::move(generators));
}

MonomialIdeal MonomialIdeal::zero(std::size_t dim) { return MonomialIdeal(dim, {}); }

MonomialIdeal MonomialIdeal::whole_ring(std::size_t dim) {
  return MonomialIdeal(dim, {Monomial::unit(dim)});
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].is_unit();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  check_same_dim(dim_, m.dim(), "contains");
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  check_same_dim(dim_, other.dim_, "contains");
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

Int MonomialIdeal::max_generator_degree() const {
  Int d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g.total_degree());
  return d;
}

Int MonomialIdeal::max_exponent() const {
  Int m = 0;
  for (const Monomial& g : gens_)
    for (const Int& e : g.exponents())
      if (e > m) m = e;
  return m;
}

bool canonical_less(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a.dim(), b.dim(), "canonical_less");
  return std::lexicographical_compare(
      a.generators().begin(), a.generators().end(),
      b.generators().begin(), b.generators().end());
}

MonomialIdeal minimalize(std::size_t dim, std::vector<Monomial> generators) {
  return MonomialIdeal(dim, std::move(generators));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a.dim(), b.dim(), "multiply");
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.dim());
  std::vector<Monomial> prods;
  prods.reserve(a.num_generators() * b.num_generators());
  for (const Monomial& f : a.generators())
    for (const Monomial& g : b.generators())
      prods.push_back(f.times(g));
  return MonomialIdeal(a.dim(), std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& a, std::uint64_t s) {
  MonomialIdeal acc = MonomialIdeal::whole_ring(a.dim());
  for (std::uint64_t i = 0; i < s; ++i) acc = multiply(acc, a);
  return acc;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a.dim(), b.dim(), "intersect");
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.dim());
  std::vector<Monomial> lcms;
  lcms.reserve(a.num_generators() * b.num_generators());
  for (const Monomial& f : a.generators())
    for (const Monomial& g : b.generators())
      lcms.push_back(f.lcm(g));
  return MonomialIdeal(a.dim(), std::move(lcms));
}

bool radical_contains(const MonomialIdeal& j, const MonomialIdeal& a) {
  check_same_dim(j.dim(), a.dim(), "radical_contains");
  if (j.is_unit()) throw precondition_error("radical_contains: j is the whole ring");
  for (const Monomial& f : a.generators()) {
    bool covered = false;
    for (const Monomial& v : j.generators()) {
      bool supp_inside = true;
      for (std::size_t i = 0; i < j.dim(); ++i) {
        if (v[i] > 0 && f[i] == 0) { supp_inside = false; break; }
      }
      if (supp_inside) { covered = true; break; }
    }
    if (!covered) return false;
  }
  return true;
}

namespace {

// Splits one mixed generator: (G, m) = (G, x_i^{m_i}) cap (G, m / x_i^{m_i})
// for i in supp(m). Repeat until every generator is a pure power.
std::vector<MonomialIdeal> split_to_pure_powers(const MonomialIdeal& j) {
  std::vector<MonomialIdeal> done;
  std::deque<MonomialIdeal> queue{j};
  while (!queue.empty()) {
    MonomialIdeal cur = std::move(queue.front());
    queue.pop_front();
    const auto& gens = cur.generators();
    std::size_t mixed = gens.size();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (gens[k].support().size() >= 2) { mixed = k; break; }
    }
    if (mixed == gens.size()) {
      done.push_back(std::move(cur));
      continue;
    }
    const Monomial& m = gens[mixed];
    std::size_t i = m.support().front();
    std::vector<Int> pure(cur.dim(), Int(0)), rest = m.exponents();
    pure[i] = m[i];
    rest[i] = 0;
    for (int branch = 0; branch < 2; ++branch) {
      std::vector<Monomial> next;
      next.reserve(gens.size());
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (k != mixed) next.push_back(gens[k]);
      next.push_back(Monomial(branch == 0 ? pure : rest));
      queue.emplace_back(cur.dim(), std::move(next));
    }
  }
  return done;
}

}  // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& j) {
  if (j.is_zero()) throw precondition_error("irreducible_decomposition: zero ideal");
  if (j.is_unit()) throw precondition_error("irreducible_decomposition: whole ring");

  std::vector<MonomialIdeal> comps = split_to_pure_powers(j);
  std::sort(comps.begin(), comps.end(), canonical_less);
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());

  // Irredundancy: drop any component containing the intersection of the rest.
  // Quadratic in the component count, which is small for inputs this library
  // meets (witness ideals are already irreducible).
  bool changed = true;
  while (changed && comps.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      MonomialIdeal rest = MonomialIdeal::whole_ring(j.dim());
      for (std::size_t k = 0; k < comps.size(); ++k)
        if (k != i) rest = intersect(rest, comps[k]);
      if (comps[i].contains(rest)) {
        comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return comps;
}

}  // namespace bsr

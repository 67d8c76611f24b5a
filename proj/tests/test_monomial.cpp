#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "bsr/errors.hpp"
#include "bsr/monomial.hpp"
#include "support/test_util.hpp"

using namespace bsr;
using namespace bsr::testutil;

namespace {

// Smallest s with a^s inside j, if any exists with s <= bound. Used as an
// oracle for radical membership: a lies in the radical of j iff some power
// of a lands in j, and s = r*(max exponent of j) + 1 always suffices.
bool some_power_inside(const MonomialIdeal& a, const MonomialIdeal& j, unsigned bound) {
  MonomialIdeal acc = MonomialIdeal::whole_ring(a.dim());
  for (unsigned s = 1; s <= bound; ++s) {
    acc = multiply(acc, a);
    if (j.contains(acc)) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("monomial") {

TEST_CASE("monomial construction and accessors") {
  Monomial m = mono({2, 0, 5});
  CHECK(m.dim() == 3);
  CHECK(m[0] == 2);
  CHECK(m[1] == 0);
  CHECK(m[2] == 5);
  CHECK(m.total_degree() == 7);
  CHECK(m.support() == std::vector<std::size_t>{0, 2});
  CHECK_FALSE(m.is_unit());
  CHECK(Monomial::unit(3).is_unit());
  CHECK(Monomial::unit(0).is_unit());
  CHECK_THROWS_AS(mono({1, -1}), precondition_error);
}

TEST_CASE("monomial divisibility, products, lcm") {
  Monomial x2 = mono({2, 0}), xy = mono({1, 1}), x2y = mono({2, 1});
  CHECK(x2.divides(x2y));
  CHECK(xy.divides(x2y));
  CHECK_FALSE(x2y.divides(x2));
  CHECK_FALSE(x2.divides(xy));
  CHECK(Monomial::unit(2).divides(x2));
  CHECK(x2.times(xy) == mono({3, 1}));
  CHECK(x2.lcm(xy) == mono({2, 1}));
  CHECK(xy.lcm(xy) == xy);
  CHECK_THROWS_AS(x2.times(mono({1, 1, 1})), dimension_error);
  CHECK_THROWS_AS(x2.divides(mono({1})), dimension_error);
}

TEST_CASE("monomial scaling and floor quotients") {
  Monomial m = mono({7, 3, 0});
  CHECK(m.scaled(3) == mono({21, 9, 0}));
  CHECK(m.quotient_floor(2) == mono({3, 1, 0}));
  CHECK(m.quotient_floor(8) == mono({0, 0, 0}));
  CHECK_THROWS_AS(m.scaled(0), precondition_error);
  CHECK_THROWS_AS(m.quotient_floor(0), precondition_error);

  // Composed floors collapse: floor(floor(u/q)/q') = floor(u/(q*q')).
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> q(1, 9);
  for (int t = 0; t < 50; ++t) {
    Monomial u = random_monomial(rng, 4, 200, true);
    Int q1(q(rng)), q2(q(rng));
    CHECK(u.quotient_floor(q1).quotient_floor(q2) == u.quotient_floor(q1 * q2));
  }
}

TEST_CASE("monomial ordering is degree then lex") {
  CHECK(mono({1, 1}) < mono({0, 3}));   // degree 2 before degree 3
  CHECK(mono({1, 1}) < mono({2, 0}));   // same degree: lex on exponents
  CHECK(mono({2, 0}) > mono({0, 2}));
  CHECK(mono({1, 2}) == mono({1, 2}));
}

TEST_CASE("ideal construction minimalizes generators") {
  MonomialIdeal i = ideal(2, {{2, 0}, {3, 0}, {1, 1}});
  CHECK(i.num_generators() == 2);
  CHECK(i == ideal(2, {{1, 1}, {2, 0}}));
  CHECK(i.contains(mono({3, 0})));

  // A unit generator swallows everything.
  MonomialIdeal u = ideal(2, {{2, 0}, {0, 0}});
  CHECK(u.is_unit());
  CHECK(u == MonomialIdeal::whole_ring(2));
  CHECK(u.num_generators() == 1);

  MonomialIdeal z = MonomialIdeal::zero(2);
  CHECK(z.is_zero());
  CHECK(z.num_generators() == 0);
  CHECK_FALSE(z.contains(mono({0, 0})));
  CHECK(ideal(2, {{1, 0}}).contains(z));

  CHECK_THROWS_AS(MonomialIdeal(2, {mono({1, 2, 3})}), dimension_error);
}

TEST_CASE("minimalize is idempotent and order independent") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    MonomialIdeal a = random_proper_ideal(rng, 3, 4, 4);
    std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
    // Pad with redundant multiples and shuffle.
    std::size_t base = gens.size();
    for (std::size_t k = 0; k < base; ++k)
      gens.push_back(gens[k].times(random_monomial(rng, 3, 2, true)));
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(minimalize(3, gens) == a);
  }
}

TEST_CASE("ideal containment") {
  MonomialIdeal i = ideal(2, {{2, 0}, {0, 3}});
  CHECK(i.contains(mono({2, 5})));
  CHECK_FALSE(i.contains(mono({1, 2})));
  CHECK(i.contains(ideal(2, {{2, 1}, {1, 4}})));
  CHECK_FALSE(i.contains(ideal(2, {{1, 0}})));
  CHECK(MonomialIdeal::whole_ring(2).contains(i));
  CHECK_THROWS_AS(i.contains(mono({1})), dimension_error);
}

TEST_CASE("multiply examples and laws") {
  CHECK(multiply(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})) == ideal(2, {{1, 1}}));
  MonomialIdeal m = ideal(2, {{1, 0}, {0, 1}});
  CHECK(multiply(m, m) == ideal(2, {{2, 0}, {1, 1}, {0, 2}}));

  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    MonomialIdeal a = random_proper_ideal(rng, 3, 3, 3);
    MonomialIdeal b = random_proper_ideal(rng, 3, 3, 3);
    MonomialIdeal c = random_proper_ideal(rng, 3, 2, 2);
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, MonomialIdeal::whole_ring(3)) == a);
    CHECK(multiply(a, MonomialIdeal::zero(3)).is_zero());
    CHECK(a.contains(multiply(a, b)));  // a*b subset of a
  }
}

TEST_CASE("power matches the expansion oracle") {
  MonomialIdeal a = ideal(2, {{2, 0}, {0, 3}});
  CHECK(power(a, 0) == MonomialIdeal::whole_ring(2));
  CHECK(power(a, 1) == a);
  CHECK(power(a, 2) == ideal(2, {{4, 0}, {2, 3}, {0, 6}}));

  MonomialIdeal edges = ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(power(edges, 2) == power_oracle(edges, 2));
  CHECK(power(edges, 3) == power_oracle(edges, 3));

  std::mt19937_64 rng(14);
  for (int t = 0; t < 20; ++t) {
    MonomialIdeal r = random_proper_ideal(rng, 3, 3, 3);
    for (unsigned s = 0; s <= 4; ++s) CHECK(power(r, s) == power_oracle(r, s));
    CHECK(power(r, 5) == multiply(power(r, 4), r));
  }
}

TEST_CASE("intersect examples and membership semantics") {
  CHECK(intersect(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})) == ideal(2, {{1, 1}}));
  CHECK(intersect(ideal(2, {{2, 0}, {0, 1}}), ideal(2, {{1, 0}, {0, 3}})) ==
        ideal(2, {{2, 0}, {1, 1}, {0, 3}}));

  std::mt19937_64 rng(15);
  for (int t = 0; t < 25; ++t) {
    MonomialIdeal a = random_proper_ideal(rng, 3, 3, 4);
    MonomialIdeal b = random_proper_ideal(rng, 3, 3, 4);
    MonomialIdeal meet = intersect(a, b);
    CHECK(meet == intersect(b, a));
    CHECK(intersect(a, a) == a);
    // m in (a meet b) iff m in a and m in b, checked on a box covering all
    // generators involved.
    std::mt19937_64 inner(t);
    for (int s = 0; s < 60; ++s) {
      Monomial m = random_monomial(inner, 3, 9, true);
      CHECK(meet.contains(m) == (a.contains(m) && b.contains(m)));
    }
  }
}

TEST_CASE("radical containment") {
  CHECK(radical_contains(ideal(2, {{2, 0}, {0, 3}}), ideal(2, {{1, 1}})));
  CHECK_FALSE(radical_contains(ideal(2, {{1, 1}}), ideal(2, {{1, 0}})));
  CHECK(radical_contains(ideal(2, {{1, 0}}), ideal(2, {{2, 0}, {1, 1}})));
  CHECK_FALSE(radical_contains(MonomialIdeal::zero(2), ideal(2, {{1, 0}})));
  CHECK_THROWS_AS(radical_contains(MonomialIdeal::whole_ring(2), ideal(2, {{1, 0}})),
                  precondition_error);

  // Oracle: a in rad(j) iff a^s lies in j for some s, and if it ever happens
  // it happens by s = r * max_exponent(j) + 1 (pigeonhole on the generator
  // repeated most often in a degree-s product).
  std::mt19937_64 rng(16);
  for (int t = 0; t < 40; ++t) {
    MonomialIdeal a = random_proper_ideal(rng, 3, 3, 2);
    MonomialIdeal j = random_proper_ideal(rng, 3, 3, 3);
    unsigned bound =
        static_cast<unsigned>(a.num_generators()) * static_cast<unsigned>(j.max_exponent()) + 1;
    CHECK(radical_contains(j, a) == some_power_inside(a, j, bound));
  }
}

TEST_CASE("irreducible decomposition examples") {
  auto comps = irreducible_decomposition(ideal(2, {{2, 0}, {1, 1}}));
  REQUIRE(comps.size() == 2);
  CHECK(std::count(comps.begin(), comps.end(), ideal(2, {{1, 0}})) == 1);
  CHECK(std::count(comps.begin(), comps.end(), ideal(2, {{2, 0}, {0, 1}})) == 1);

  comps = irreducible_decomposition(ideal(2, {{2, 0}, {0, 3}}));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == ideal(2, {{2, 0}, {0, 3}}));

  comps = irreducible_decomposition(ideal(2, {{1, 1}}));
  REQUIRE(comps.size() == 2);
  CHECK(std::count(comps.begin(), comps.end(), ideal(2, {{1, 0}})) == 1);
  CHECK(std::count(comps.begin(), comps.end(), ideal(2, {{0, 1}})) == 1);

  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::zero(2)), precondition_error);
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::whole_ring(2)), precondition_error);
}

TEST_CASE("irreducible decomposition properties on random ideals") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    MonomialIdeal j = random_proper_ideal(rng, 3, 3, 3);
    auto comps = irreducible_decomposition(j);
    REQUIRE(!comps.empty());

    MonomialIdeal meet = MonomialIdeal::whole_ring(3);
    for (const auto& c : comps) {
      meet = intersect(meet, c);
      // Irreducible shape: pure powers of pairwise distinct variables.
      std::set<std::size_t> seen;
      for (const Monomial& g : c.generators()) {
        auto supp = g.support();
        REQUIRE(supp.size() == 1);
        CHECK(seen.insert(supp.front()).second);
      }
    }
    CHECK(meet == j);

    // Irredundant: no component contains the intersection of the others.
    if (comps.size() > 1) {
      for (std::size_t i = 0; i < comps.size(); ++i) {
        MonomialIdeal rest = MonomialIdeal::whole_ring(3);
        for (std::size_t k = 0; k < comps.size(); ++k)
          if (k != i) rest = intersect(rest, comps[k]);
        CHECK_FALSE(comps[i].contains(rest));
      }
    }
  }
}

TEST_CASE("canonical order on ideals") {
  MonomialIdeal a = ideal(2, {{1, 0}});
  MonomialIdeal b = ideal(2, {{1, 0}, {0, 1}});
  CHECK(canonical_less(b, a));  // (x2, x1) precedes (x1): shorter lex prefix wins
  CHECK_FALSE(canonical_less(a, a));

  std::mt19937_64 rng(18);
  for (int t = 0; t < 30; ++t) {
    MonomialIdeal u = random_proper_ideal(rng, 2, 3, 3);
    MonomialIdeal v = random_proper_ideal(rng, 2, 3, 3);
    bool lt = canonical_less(u, v), gt = canonical_less(v, u);
    CHECK((u == v ? (!lt && !gt) : (lt != gt)));
  }
}

}  // TEST_SUITE

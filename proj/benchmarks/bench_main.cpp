// Microbenchmarks for the hot paths: the exact ILP solve (one per nu value),
// level-set sweeps over the witness grid, Cartier chains, and p-adic digit
// round trips. Run with --benchmark_filter=... to narrow.

#include <benchmark/benchmark.h>

#include <vector>

#include "bsr/frobenius.hpp"
#include "bsr/ideal_io.hpp"
#include "bsr/ilp.hpp"
#include "bsr/monomial.hpp"
#include "bsr/nu.hpp"
#include "bsr/padic.hpp"

namespace {

bsr::MonomialIdeal diagonal_ideal() {
  return bsr::parse_ideal("(x1^2*x2*x3, x1*x2^2*x3, x1*x2*x3^2)");
}

bsr::MonomialIdeal planar_ideal() { return bsr::parse_ideal("(x1^2, x2^3)"); }

// One ILP solve for the diagonal ideal against J=(x^3,y^3,z^3) at cap scale q.
void bench_ilp(benchmark::State& state, const bsr::Int& q) {
  bsr::NuProblem prob;
  prob.rows = {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
  prob.caps = {3 * q - 1, 3 * q - 1, 3 * q - 1};
  for (auto _ : state) {
    auto r = bsr::max_value(prob);
    benchmark::DoNotOptimize(r);
  }
}

void BM_IlpSmallCaps(benchmark::State& state) { bench_ilp(state, 5); }
BENCHMARK(BM_IlpSmallCaps);

void BM_IlpDeepCaps(benchmark::State& state) {
  bsr::Int q = bsr::pow_int(3, 44);  // caps ~ 70 digits
  bench_ilp(state, q);
}
BENCHMARK(BM_IlpDeepCaps);

void BM_IlpWitness(benchmark::State& state) {
  bsr::NuProblem prob;
  prob.rows = {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
  prob.caps = {14, 14, 14};
  for (auto _ : state) {
    auto r = bsr::maximize(prob);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_IlpWitness);

void BM_GridLevelSet(benchmark::State& state) {
  auto a = diagonal_ideal();
  bsr::PrimePower pp(2, static_cast<unsigned>(state.range(0)));
  auto grid = bsr::default_grid(a);
  for (auto _ : state) {
    auto s = bsr::nu_set_grid(a, pp, grid);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_GridLevelSet)->Arg(4)->Arg(16)->Arg(44);

void BM_CartierChain(benchmark::State& state) {
  auto a = planar_ideal();
  bsr::PrimePower pp(2, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    auto s = bsr::nu_set_chain(a, pp);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_CartierChain)->Arg(2)->Arg(4)->Arg(6);

void BM_PadicRoundTrip(benchmark::State& state) {
  bsr::Rat x(-19, 12);
  for (auto _ : state) {
    // The detection window (8, 12) needs at least 8 + 3*12 = 44 digits.
    auto digits = bsr::digits_of_rational(x, 5, 44);
    auto period = bsr::detect_period(digits, 8, 12);
    auto back = bsr::rational_from_expansion(*period);
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(BM_PadicRoundTrip);

}  // namespace

BENCHMARK_MAIN();

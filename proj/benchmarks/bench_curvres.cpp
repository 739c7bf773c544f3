#include <benchmark/benchmark.h>

#include "curvres/groebner.hpp"
#include "curvres/hilbert.hpp"
#include "curvres/ideal.hpp"
#include "curvres/resolution.hpp"

namespace {

using namespace curvres;

// Assembling a full graded Betti table from the closed forms.
void BM_minimal_table(benchmark::State& state) {
  auto seq = ArithmeticSequence::validate(state.range(0), 2, state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_table(seq));
  }
}
BENCHMARK(BM_minimal_table)->Args({11, 4})->Args({47, 6})->Args({101, 8});

// The series oracle: expand the table numerator and compare against the
// semigroup indicator series up to the default bound.
void BM_verify_hilbert(benchmark::State& state) {
  auto seq = ArithmeticSequence::validate(state.range(0), 2, state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_hilbert(seq));
  }
}
BENCHMARK(BM_verify_hilbert)->Args({11, 4})->Args({47, 6})->Args({101, 8});

// Reduced basis of the full defining ideal.
void BM_buchberger(benchmark::State& state) {
  auto seq = ArithmeticSequence::validate(state.range(0), 2, state.range(1));
  auto gens = ideal_I(seq, seq.n()).all();
  auto order = MonomialOrder::graded_revlex();
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(gens, order));
  }
}
BENCHMARK(BM_buchberger)->Args({11, 4})->Args({47, 6})->Args({13, 6});

// Colon of the next-to-last ideal by the last adjoined binomial, the
// workhorse of the colon verification suite.
void BM_colon(benchmark::State& state) {
  auto seq = ArithmeticSequence::validate(state.range(0), 2, state.range(1));
  auto gens = ideal_I(seq, seq.n() - 1).all();
  auto f = delta(seq, seq.n());
  for (auto _ : state) {
    benchmark::DoNotOptimize(colon(gens, f));
  }
}
BENCHMARK(BM_colon)->Args({11, 4})->Args({13, 6});

// Betti numbers of translates across a full period window.
void BM_periodicity_scan(benchmark::State& state) {
  RawSequence raw{11, 13, 15, 17, 19};
  for (auto _ : state) {
    benchmark::DoNotOptimize(periodicity_scan(raw, 0, state.range(0)));
  }
}
BENCHMARK(BM_periodicity_scan)->Arg(100)->Arg(300);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "dioph/number_theory.hpp"

static void BM_SievePrimes(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dioph::sieve_primes(limit));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SievePrimes)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);

static void BM_ChebyshevTheta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dioph::chebyshev_theta(static_cast<double>(state.range(0))));
}
BENCHMARK(BM_ChebyshevTheta)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_MultOrder2(benchmark::State& state) {
  std::uint64_t d = 1;
  for (auto _ : state) {
    d = d + 2 > 1'000'001 ? 3 : d + 2;
    benchmark::DoNotOptimize(dioph::mult_order_2(d));
  }
}
BENCHMARK(BM_MultOrder2);

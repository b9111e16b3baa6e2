#include <benchmark/benchmark.h>

#include "dioph/exp_sums.hpp"

static void BM_EvalG(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  double a = 0.1234;
  for (auto _ : state) {
    a += 1e-7;
    benchmark::DoNotOptimize(dioph::eval_G(a, L));
  }
}
BENCHMARK(BM_EvalG)->Arg(16)->Arg(64);

static void BM_MomentCount(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dioph::moment_count_Nk(k, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_MomentCount)->Args({2, 14})->Args({3, 12})->Args({4, 10})->Unit(benchmark::kMillisecond);

static void BM_MomentQuadrature(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dioph::g_moment_quadrature(2, L, std::uint64_t{1} << (L + 6)));
}
BENCHMARK(BM_MomentQuadrature)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_MeasureExceed(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dioph::measure_exceed(0.8844472132, L, std::uint64_t{1} << (L + 6)).estimated_measure);
  }
}
BENCHMARK(BM_MeasureExceed)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

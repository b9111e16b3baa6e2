#include <benchmark/benchmark.h>

#include "dioph/search.hpp"

namespace {

const dioph::CoefficientSystem& published_system() {
  static const auto sys = [] {
    dioph::RawSystem raw;
    raw.lambda = {"-sqrt(5)", "sqrt(3)", "sqrt(2)"};
    raw.ratio = {"5", "3", "2"};
    raw.eta = "1";
    raw.eps = "1e-20";
    return dioph::validate_system(raw);
  }();
  return sys;
}

}  // namespace

static void BM_CountSolutions(benchmark::State& state) {
  dioph::SearchParams params;
  params.X = static_cast<double>(state.range(0));
  params.s = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(dioph::count_solutions(published_system(), params).count);
}
BENCHMARK(BM_CountSolutions)
    ->Args({10'000, 1})
    ->Args({100'000, 1})
    ->Args({10'000, 2})
    ->Args({100'000, 2})
    ->Unit(benchmark::kMillisecond);

static void BM_RCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dioph::r_count(24, static_cast<double>(state.range(0))));
}
BENCHMARK(BM_RCount)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_RiegerCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dioph::rieger_count(static_cast<double>(state.range(0))));
}
BENCHMARK(BM_RiegerCount)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

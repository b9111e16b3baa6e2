#include <benchmark/benchmark.h>

#include "dioph/constants.hpp"
#include "dioph/s0.hpp"

static void BM_S0Report(benchmark::State& state) {
  dioph::RawSystem raw;
  raw.lambda = {"-sqrt(5)", "sqrt(3)", "sqrt(2)"};
  raw.ratio = {"5", "3", "2"};
  raw.eta = "1";
  raw.eps = "1e-20";
  raw.digits = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dioph::build_s0_report(dioph::validate_system(raw)).s0_ours);
}
BENCHMARK(BM_S0Report)->Arg(30)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

static void BM_C5PartialSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dioph::c5_partial_sum(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_C5PartialSum)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

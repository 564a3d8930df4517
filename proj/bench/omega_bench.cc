#include <benchmark/benchmark.h>

#include "classent/omega.hpp"

using namespace classent::omega;

// serial reference: one recursive walk, no frontier, no OpenMP
static void BM_omega_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_omega_serial(n, 16 * n).omega);
}
BENCHMARK(BM_omega_serial)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_omega_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  EnumerationOptions opts;
  opts.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(compute_omega(n, 16 * n, opts).omega);
}
BENCHMARK(BM_omega_parallel)
    ->ArgsProduct({{16, 20, 24}, {1, 2, 4, 8}})
    ->ArgNames({"n", "workers"})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();

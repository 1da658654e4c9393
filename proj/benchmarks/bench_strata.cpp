#include <benchmark/benchmark.h>

#include "wittgrass/demazure.hpp"
#include "wittgrass/grassmannian.hpp"

using namespace wittgrass;

// Args: n, c, q, workers.
static void BM_StratumCounts(benchmark::State& state) {
  EnumOptions opt;
  opt.workers = static_cast<int>(state.range(3));
  for (auto _ : state)
    benchmark::DoNotOptimize(stratum_counts(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), state.range(2), opt));
}
BENCHMARK(BM_StratumCounts)
    ->Args({3, 2, 2, 1})
    ->Args({3, 2, 3, 1})
    ->Args({4, 2, 2, 1})
    ->Args({3, 3, 2, 1})
    ->Args({4, 2, 2, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_DemazureFibers(benchmark::State& state) {
  const Partition lambda = state.range(1) == 0 ? Partition({2, 1}) : Partition({2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(demazure_fibers(3, lambda, state.range(0)));
}
BENCHMARK(BM_DemazureFibers)->Args({2, 0})->Args({3, 0})->Args({2, 1})->Args({3, 1})->Unit(benchmark::kMillisecond);

static void BM_Subspaces(benchmark::State& state) {
  const auto field = GaloisRingCtx::make(3, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(subspaces(field, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 2));
}
BENCHMARK(BM_Subspaces)->Arg(3)->Arg(4)->Arg(5);

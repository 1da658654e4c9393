#include <benchmark/benchmark.h>

#include <random>

#include "wittgrass/wittlaws.hpp"

using namespace wittgrass;

static void BM_DeriveLaws(benchmark::State& state) {
  const auto p = state.range(0);
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(derive_witt_laws(p, m));
}
BENCHMARK(BM_DeriveLaws)->Args({2, 4})->Args({3, 3})->Args({3, 4})->Args({5, 3})->Unit(benchmark::kMillisecond);

// Engine 0 = expanded laws, 1 = ghost recursion on lifts.
static void BM_WittMul(benchmark::State& state) {
  const auto q = state.range(0);
  const int m = static_cast<int>(state.range(1));
  const auto engine = state.range(2) ? WittRing::Engine::Ghost : WittRing::Engine::Expanded;
  const auto [p, d] = *prime_power(q);
  const WittRing W(make_field(p, d), m, engine);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> dist(0, q - 1);
  std::vector<WittVec> xs;
  for (int i = 0; i < 64; ++i) {
    std::vector<std::int64_t> codes;
    for (int k = 0; k < m; ++k) codes.push_back(dist(rng));
    xs.push_back(W.from_codes(codes));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(W.mul(xs[i % 64], xs[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_WittMul)->Args({4, 3, 0})->Args({4, 3, 1})->Args({9, 3, 0})->Args({9, 3, 1})->Args({7, 4, 1});

static void BM_WittToGalois(benchmark::State& state) {
  const WittRing W(make_field(3, 2), 4);
  const auto ctx = GaloisRingCtx::make(3, 2, 4);
  const auto x = W.from_codes({1, 5, 7, 2});
  for (auto _ : state) benchmark::DoNotOptimize(galois_to_witt(witt_to_galois(x, ctx)));
}
BENCHMARK(BM_WittToGalois);

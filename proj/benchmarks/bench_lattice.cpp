#include <benchmark/benchmark.h>

#include <random>

#include "wittgrass/lattice.hpp"

using namespace wittgrass;

namespace {

Matrix random_matrix(const CtxPtr& ctx, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(0, ctx->modulus() - 1);
  std::uniform_int_distribution<int> val(0, 2);
  Matrix A(ctx, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A.at(i, j) = RingElem(ctx, dist(rng)).times_p_pow(val(rng));
  return A;
}

}  // namespace

static void BM_Smith(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ctx = GaloisRingCtx::make(3, 1, 12);
  const auto A = random_matrix(ctx, n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(A));
}
BENCHMARK(BM_Smith)->Arg(3)->Arg(6)->Arg(12)->Arg(24);

static void BM_Canonicalize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ctx = GaloisRingCtx::make(2, 1, 4);
  const auto A = random_matrix(ctx, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(LatticeCanon::canonicalize(A, Window{0, 4}));
}
BENCHMARK(BM_Canonicalize)->Arg(3)->Arg(6)->Arg(12);

static void BM_LatticeSum(benchmark::State& state) {
  const auto ctx = GaloisRingCtx::make(3, 1, 3);
  const auto L = LatticeCanon::canonicalize(random_matrix(ctx, 4, 1), Window{0, 3});
  const auto M = LatticeCanon::canonicalize(random_matrix(ctx, 4, 2), Window{0, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(lattice_sum(L, M));
    benchmark::DoNotOptimize(lattice_intersection(L, M));
  }
}
BENCHMARK(BM_LatticeSum);

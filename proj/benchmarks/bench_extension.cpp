#include <benchmark/benchmark.h>

#include "wittgrass/centralext.hpp"
#include "wittgrass/detline.hpp"

using namespace wittgrass;

static void BM_DetTorsion(benchmark::State& state) {
  const auto Q = TorsionModule::of_type(make_field(3, 1), Partition({3, 2, 1}));
  const auto chain = reference_chain(Q);
  for (auto _ : state) benchmark::DoNotOptimize(det_torsion(Q, chain));
}
BENCHMARK(BM_DetTorsion);

static void BM_CompareChains(benchmark::State& state) {
  const auto Q = TorsionModule::of_type(make_field(2, 1), Partition({1, 1, 1}));
  const auto chains = maximal_chains(Q);
  for (auto _ : state) benchmark::DoNotOptimize(compare_chains(Q, chains.front(), chains.back()));
}
BENCHMARK(BM_CompareChains);

static void BM_Cocycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ctx = GaloisRingCtx::make(5, 1, default_loop_precision(5));
  // diagonal entries pair up as x, x^-1 so both determinants are 1
  std::vector<KElement> a(static_cast<std::size_t>(n), KElement(0, RingElem(ctx, 1))), b = a;
  for (int i = 0; i + 1 < n; i += 2) {
    const KElement x(1, RingElem(ctx, 2 + i)), y(-1, RingElem(ctx, 3));
    a[static_cast<std::size_t>(i)] = x;
    a[static_cast<std::size_t>(i + 1)] = x.inverse();
    b[static_cast<std::size_t>(i)] = y;
    b[static_cast<std::size_t>(i + 1)] = y.inverse();
  }
  // integral unipotent factor so the product is not diagonal
  Matrix u = Matrix::identity(ctx, n);
  u.at(0, n - 1) = RingElem(ctx, 3);
  const auto g = LoopGroupElt(u) * LoopGroupElt::diagonal(a);
  const auto h = LoopGroupElt::diagonal(b) * LoopGroupElt(u);
  for (auto _ : state) benchmark::DoNotOptimize(cocycle(g, h));
}
BENCHMARK(BM_Cocycle)->Arg(2)->Arg(3)->Arg(4);

static void BM_TameSymbol(benchmark::State& state) {
  const auto ctx = GaloisRingCtx::make(3, 2, 20);
  const auto x = KElement::parse("p^3*(4.1)", ctx), y = KElement::parse("p^-2*(7)", ctx);
  for (auto _ : state) benchmark::DoNotOptimize(tame_symbol(x, y));
}
BENCHMARK(BM_TameSymbol);

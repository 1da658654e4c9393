#include "doctest.h"

#include "support/brute.hpp"
#include "wittgrass/centralext.hpp"
#include "wittgrass/grassmannian.hpp"

using namespace wittgrass;

namespace {

CtxPtr loop_ctx(std::int64_t q) {
  const auto pq = prime_power(q);
  return GaloisRingCtx::make(pq->first, pq->second, default_loop_precision(pq->first));
}

// Integral matrix with determinant exactly 1.
Matrix random_sl_integral(const CtxPtr& ctx, int n, std::mt19937_64& rng) {
  Matrix M = brute::random_invertible(ctx, n, rng);
  const auto d = determinant(M).inv();
  for (int j = 0; j < n; ++j) M.at(0, j) *= d;
  return M;
}

// k1 diag(p^{v_i}) k2 with Σ v_i = 0 and |v_i| <= 2.
LoopGroupElt random_sl(const CtxPtr& ctx, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> vd(-2, 2);
  std::vector<int> v(static_cast<std::size_t>(n));
  while (true) {
    int sum = 0;
    for (int i = 0; i + 1 < n; ++i) sum += v[static_cast<std::size_t>(i)] = vd(rng);
    v.back() = -sum;
    if (std::abs(v.back()) <= 2) break;
  }
  std::vector<KElement> diag;
  for (int x : v) diag.emplace_back(x, RingElem(ctx, 1));
  return LoopGroupElt(random_sl_integral(ctx, n, rng)) * LoopGroupElt::diagonal(diag) * LoopGroupElt(random_sl_integral(ctx, n, rng));
}

std::vector<KElement> grid(const CtxPtr& ctx) {
  std::vector<KElement> out;
  const auto field = ctx->residue_field();
  for (int v = -2; v <= 2; ++v)
    for (const auto& u : field_elements(field))
      if (!u.is_zero()) out.push_back(KElement::teichmuller_unit(u, ctx, v));
  return out;
}

}  // namespace

TEST_CASE("tame symbol examples") {
  for (std::int64_t q : {2, 3, 4, 5, 9}) {
    auto ctx = loop_ctx(q);
    auto field = ctx->residue_field();
    const KElement p(1, RingElem(ctx, 1));
    CHECK(tame_symbol(p, p) == RingElem(field, -1));
    for (const auto& u : field_elements(field)) {
      if (u.is_zero()) continue;
      const auto U = KElement::teichmuller_unit(u, ctx);
      CHECK(tame_symbol(U, U).is_one());
      CHECK(tame_symbol(p, U) == u.inv());
      CHECK(tame_symbol(U, p) == u);
    }
  }
  auto ctx = loop_ctx(2);
  CHECK(tame_symbol(KElement(1, RingElem(ctx, 1)), KElement(1, RingElem(ctx, 1))).is_one());
}

TEST_CASE("tame symbol is bimultiplicative and antisymmetric") {
  for (std::int64_t q : {3, 5}) {
    auto ctx = loop_ctx(q);
    const auto g = grid(ctx);
    for (const auto& a : g)
      for (const auto& b : g) {
        CHECK((tame_symbol(a, b) * tame_symbol(b, a)).is_one());
        for (const auto& c : {g.front(), g[g.size() / 2], g.back()}) {
          CHECK(tame_symbol(a * c, b) == tame_symbol(a, b) * tame_symbol(c, b));
          CHECK(tame_symbol(a, b * c) == tame_symbol(a, b) * tame_symbol(a, c));
        }
      }
  }
}

TEST_CASE("Steinberg relation") {
  for (std::int64_t q : {3, 4, 5, 9}) {
    auto ctx = loop_ctx(q);
    std::mt19937_64 rng(static_cast<std::uint64_t>(q));
    const auto elems = brute::ring_elements(ctx->with_precision(2));
    int split[3] = {0, 0, 0};
    for (const auto& x : grid(ctx)) {
      if (x.valuation() == 0 && x.residue().is_one()) continue;  // 1 - x is not a unit times a Teichmuller digit here
      CHECK(tame_symbol(x, x.one_minus()).is_one());
      ++split[x.valuation() > 0 ? 0 : x.valuation() == 0 ? 1 : 2];
    }
    // v(x) = 0 with residue 1: 1 - x has positive valuation.
    for (const auto& e : elems) {
      const auto t = e.lift_to(ctx).times_p_pow(1);
      if (t.is_zero()) continue;
      const KElement x(0, RingElem(ctx, 1) + t);
      CHECK(x.one_minus().valuation() >= 1);
      CHECK(tame_symbol(x, x.one_minus()).is_one());
    }
    CHECK(split[0] > 0);
    CHECK(split[1] > 0);
    CHECK(split[2] > 0);
  }
  auto ctx = loop_ctx(3);
  CHECK_THROWS_AS(KElement(0, RingElem(ctx, 1)).one_minus(), PrecisionError);
}

TEST_CASE("parsing field elements") {
  auto ctx = loop_ctx(5);
  const auto a = KElement::parse("p^2*(3.1)", ctx);
  CHECK(a.valuation() == 2);
  CHECK(a.residue() == RingElem(ctx->residue_field(), 3));
  const auto b = KElement::parse("0.2*p^-1", ctx);
  CHECK(b.valuation() == 0);
  CHECK(b.residue() == RingElem(ctx->residue_field(), 2));
  CHECK_THROWS_AS(KElement::parse("0", ctx), InputError);
  CHECK_THROWS_AS(KElement::parse("p^x", ctx), InputError);
}

TEST_CASE("loop group arithmetic") {
  auto ctx = loop_ctx(3);
  std::mt19937_64 rng(1);
  for (int n : {2, 3}) {
    for (int t = 0; t < 20; ++t) {
      const auto g = random_sl(ctx, n, rng);
      CHECK(g.is_special());
      CHECK(g.valuation() >= -2);
      CHECK(g.det_valuation() == 0);
      CHECK(g * g.inverse() == LoopGroupElt::identity(ctx, n));
      CHECK(g.inverse() * g == LoopGroupElt::identity(ctx, n));
    }
  }
  const KElement p(1, RingElem(ctx, 1));
  const auto d = LoopGroupElt::diagonal({p, p.inverse()});
  CHECK(d.shift() == 1);
  CHECK(d.valuation() == -1);
  CHECK_FALSE(LoopGroupElt::diagonal({p, p}).is_special());
  CHECK_THROWS_AS(LoopGroupElt(Matrix(ctx, 2, 2)), PrecisionError);
}

TEST_CASE("coset determinants") {
  auto ctx = loop_ctx(5);
  for (int n = 1; n <= 3; ++n) {
    const auto line = coset_det(LoopGroupElt::identity(ctx, n), -1);
    CHECK(line.degree == n);
    CHECK(line.scalar.is_one());
    CHECK(coset_module(LoopGroupElt::identity(ctx, n), -1).type() == Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
  }
  const KElement p(1, RingElem(ctx, 1));
  const auto d = LoopGroupElt::diagonal({p, p.inverse()});
  CHECK(coset_det(d, -1).degree == 2);
  CHECK(coset_module(d, -1).type() == Partition({2}));
  CHECK_THROWS_AS(coset_det(d, 0), InputError);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    const LoopGroupElt k(random_sl_integral(ctx, 3, rng));
    CHECK(coset_det(k, 0).degree == 0);
    CHECK(coset_det(k, -2).degree == 6);
  }
  // Level coherence: the reference at level a - 1 is the reference at level a
  // followed by the standard basis of p^{a-1} O^n / p^a O^n.
  for (int t = 0; t < 20; ++t) {
    const auto g = random_sl(ctx, t % 2 ? 3 : 2, rng);
    const int a = g.valuation();
    const auto Qa = coset_module(g, a), Qb = coset_module(g, a - 1);
    std::vector<std::vector<RingElem>> vs;
    for (const auto& w : reference_chain(Qa).vectors) {
      auto x = Qa.lift(w);
      for (auto& e : x) e = e.times_p_pow(1);
      vs.push_back(x);
    }
    for (int i = 0; i < g.n(); ++i) {
      auto e = zero_vector(Qb.presentation().ctx(), g.n());
      e[static_cast<std::size_t>(i)] = RingElem(Qb.presentation().ctx(), 1);
      vs.push_back(e);
    }
    const auto line = det_torsion(Qb, chain_from_vectors(Qb, vs));
    CHECK(line.scalar.is_one());
    CHECK(line.degree == Qa.length() + g.n());
  }
}

TEST_CASE("cocycle normalization") {
  auto ctx = loop_ctx(3);
  std::mt19937_64 rng(4);
  for (int n : {2, 3}) {
    const auto one = LoopGroupElt::identity(ctx, n);
    for (int t = 0; t < 10; ++t) {
      const auto g = random_sl(ctx, n, rng);
      CHECK(cocycle(one, g).is_one());
      CHECK(cocycle(g, one).is_one());
      CHECK(commutator_pairing(g, g).is_one());
    }
  }
  const KElement p(1, RingElem(ctx, 1));
  CHECK_THROWS_AS(cocycle(LoopGroupElt::diagonal({p, p}), LoopGroupElt::identity(ctx, 2)), InputError);
}

TEST_CASE("cocycle identity on random triples") {
  for (std::int64_t q : {3, 5}) {
    auto ctx = loop_ctx(q);
    for (int n : {2, 3}) {
      std::mt19937_64 rng(static_cast<std::uint64_t>(100 * q + n));
      for (int t = 0; t < 100; ++t) {
        const auto g = random_sl(ctx, n, rng), h = random_sl(ctx, n, rng), k = random_sl(ctx, n, rng);
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(t);
        CHECK(cocycle(g, h) * cocycle(g * h, k) == cocycle(g, h * k) * cocycle(h, k));
      }
    }
  }
}

TEST_CASE("cocycle does not depend on the level") {
  for (std::int64_t q : {3, 5}) {
    auto ctx = loop_ctx(q);
    std::mt19937_64 rng(static_cast<std::uint64_t>(q));
    for (int t = 0; t < 30; ++t) {
      const int n = t % 2 ? 3 : 2;
      const auto g = random_sl(ctx, n, rng), h = random_sl(ctx, n, rng);
      const int a = std::min(g.valuation(), h.valuation());
      const auto c = cocycle(g, h, a);
      CHECK(c == cocycle(g, h, a - 1));
      CHECK(c == cocycle(g, h));
      CHECK(c == cocycle_at(g, h, h.valuation() - 1, g.valuation()));
    }
  }
}

TEST_CASE("commutator pairing on tori matches the tame symbol") {
  for (std::int64_t q : {3, 5}) {
    auto ctx = loop_ctx(q);
    const auto g = grid(ctx);
    for (const auto& a : g)
      for (const auto& b : g) {
        const auto A = LoopGroupElt::diagonal({a, a.inverse()});
        const auto B = LoopGroupElt::diagonal({b, b.inverse()});
        const auto pair = commutator_pairing(A, B);
        CHECK(pair == torus_symbol({a, a.inverse()}, {b, b.inverse()}));
        CHECK(pair == tame_symbol(a, b).pow(2));
      }
    // p against a Teichmuller unit u gives u^{-2}.
    for (const auto& u : field_elements(ctx->residue_field())) {
      if (u.is_zero()) continue;
      const KElement p(1, RingElem(ctx, 1)), U = KElement::teichmuller_unit(u, ctx);
      CHECK(commutator_pairing(LoopGroupElt::diagonal({p, p.inverse()}), LoopGroupElt::diagonal({U, U.inverse()})) == u.inv().pow(2));
    }
  }
  // Rank 3 tori.
  auto ctx = loop_ctx(5);
  std::mt19937_64 rng(8);
  const auto g = grid(ctx);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (int t = 0; t < 40; ++t) {
    const auto a1 = g[pick(rng)], a2 = g[pick(rng)], b1 = g[pick(rng)], b2 = g[pick(rng)];
    const std::vector<KElement> a{a1, a2, (a1 * a2).inverse()}, b{b1, b2, (b1 * b2).inverse()};
    CHECK(commutator_pairing(LoopGroupElt::diagonal(a), LoopGroupElt::diagonal(b)) == torus_symbol(a, b));
  }
  // Non-commuting arguments are rejected.
  const KElement p(1, RingElem(ctx, 1));
  Matrix u = Matrix::identity(ctx, 2);
  u.at(0, 1) = RingElem(ctx, 1);
  CHECK_THROWS_AS(commutator_pairing(LoopGroupElt::diagonal({p, p.inverse()}), LoopGroupElt(u)), InputError);
}

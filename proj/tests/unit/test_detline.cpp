#include "doctest.h"

#include "support/brute.hpp"
#include "wittgrass/detline.hpp"
#include "wittgrass/grassmannian.hpp"

using namespace wittgrass;

namespace {

TorsionModule random_module(const Partition& type, int n, std::int64_t q, std::mt19937_64& rng) {
  auto ctx = ring_for_q(q, type.total() + 2);
  Matrix D(ctx, n, n);
  for (int k = 0; k < n; ++k) D.at(k, k) = RingElem(ctx, 1).times_p_pow(type.part(k + 1));
  return TorsionModule(IsogenyMatrix(brute::random_invertible(ctx, n, rng) * D * brute::random_invertible(ctx, n, rng)));
}

// Rescale each vector by a random unit and add a random element of the previous step.
ChainBasis perturb(const TorsionModule& Q, const ChainBasis& c, std::mt19937_64& rng) {
  const auto elems = brute::ring_elements(Q.ctx());
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  ChainBasis out = c;
  for (std::size_t j = 0; j < out.vectors.size(); ++j) {
    RingElem u = elems[pick(rng)];
    while (!u.is_unit()) u = elems[pick(rng)];
    for (auto& x : out.vectors[j]) x = u * x;
    for (std::size_t l = 0; l < j; ++l) {
      const RingElem s = elems[pick(rng)];
      for (int k = 0; k < Q.rank(); ++k) out.vectors[j][static_cast<std::size_t>(k)] += s * c.vectors[l][static_cast<std::size_t>(k)];
    }
  }
  return out;
}

// Square O-basis (at precision N) of a lattice in the window [0, c].
Matrix basis_of(const LatticeCanon& L, const CtxPtr& big) {
  const int n = L.n();
  const int c = L.window().b;
  Matrix B(big, n, n);
  std::vector<bool> have(static_cast<std::size_t>(n), false);
  for (std::size_t r = 0; r < L.pivot_cols().size(); ++r) {
    const int col = L.pivot_cols()[r];
    have[static_cast<std::size_t>(col)] = true;
    for (int j = 0; j < n; ++j) B.at(col, j) = L.gens().at(static_cast<int>(r), j).lift_to(big);
  }
  for (int j = 0; j < n; ++j)
    if (!have[static_cast<std::size_t>(j)]) B.at(j, j) = RingElem(big, 1).times_p_pow(c);
  return B;
}

}  // namespace

TEST_CASE("tensor and braiding signs") {
  auto f = ring_for_q(5, 1);
  const GradedLine a{RingElem(f, 2), 1}, b{RingElem(f, 3), 1};
  auto r = tensor_braid(a, b);
  CHECK(r.swap_sign == -1);
  CHECK(r.line == GradedLine{RingElem(f, 1), 2});
  CHECK(tensor_braid(GradedLine{RingElem(f, 2), 0}, b).swap_sign == 1);
  r = tensor_braid(GradedLine{RingElem(f, 2), 2}, GradedLine{RingElem(f, 4), 3});
  CHECK(r.line == GradedLine{RingElem(f, 3), 5});
  CHECK(r.swap_sign == 1);
  for (int d1 = -3; d1 <= 3; ++d1)
    for (int d2 = -3; d2 <= 3; ++d2) {
      const auto s = tensor_braid(GradedLine{RingElem(f, 1), d1}, GradedLine{RingElem(f, 1), d2}).swap_sign;
      CHECK(s * tensor_braid(GradedLine{RingElem(f, 1), d2}, GradedLine{RingElem(f, 1), d1}).swap_sign == 1);
      CHECK(s == ((d1 * d2) % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("determinants of vector spaces") {
  auto f = ring_for_q(3, 1);
  CHECK(det_vect(Matrix::identity(f, 4)) == GradedLine{RingElem(f, 1), 4});
  CHECK(det_vect(Matrix::from_ints(f, {{0, 1}, {1, 0}})) == GradedLine{RingElem(f, -1), 2});
  CHECK(det_vect(Matrix(f, 0, 0)).degree == 0);
  CHECK_THROWS_AS(det_vect(Matrix::from_ints(f, {{1, 1}, {1, 1}})), NotAUnit);
  // Swapping blocks of sizes m and k.
  for (int m = 0; m <= 3; ++m)
    for (int k = 0; k <= 3; ++k) {
      Matrix P(f, m + k, m + k);
      for (int i = 0; i < m; ++i) P.at(i, k + i) = RingElem(f, 1);
      for (int i = 0; i < k; ++i) P.at(m + i, i) = RingElem(f, 1);
      const auto line = det_vect(P);
      CHECK(line.scalar == RingElem(f, (m * k) % 2 == 0 ? 1 : -1));
      if (m + k > 0) CHECK(line.scalar == brute::leibniz_det(P));
    }
  // Composition multiplies scalars.
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto A = brute::random_invertible(f, 3, rng), B = brute::random_invertible(f, 3, rng);
    CHECK(det_vect(A * B).scalar == det_vect(A).scalar * det_vect(B).scalar);
  }
}

TEST_CASE("torsion determinant examples") {
  const auto field = make_field(3, 1);
  const auto zero = TorsionModule::of_type(field, Partition(), 2);
  CHECK(det_torsion(zero, ChainBasis{}).degree == 0);
  CHECK(det_torsion(zero, ChainBasis{}).scalar.is_one());

  const auto cyc = TorsionModule::of_type(field, Partition({2}), 1);
  const auto line = det_torsion(cyc, reference_chain(cyc));
  CHECK(line.degree == 2);
  CHECK(line.scalar.is_one());

  const auto sq = TorsionModule::of_type(field, Partition({1, 1}), 2);
  auto ctx = sq.presentation().ctx();
  auto chain = chain_from_vectors(sq, {{RingElem(ctx, 1), RingElem(ctx, 1)}, {RingElem(ctx, 0), RingElem(ctx, 1)}});
  CHECK(det_torsion(sq, chain) == GradedLine{RingElem(ctx->residue_field(), 1), 2});
  chain = chain_from_vectors(sq, {{RingElem(ctx, 0), RingElem(ctx, 1)}, {RingElem(ctx, 1), RingElem(ctx, 0)}});
  CHECK(det_torsion(sq, chain).scalar == RingElem(ctx->residue_field(), -1));
  chain = chain_from_vectors(sq, {{RingElem(ctx, 2), RingElem(ctx, 0)}, {RingElem(ctx, 1), RingElem(ctx, 1)}});
  CHECK(det_torsion(sq, chain).scalar == RingElem(ctx->residue_field(), 2));
}

TEST_CASE("invalid chains are rejected") {
  const auto Q = TorsionModule::of_type(make_field(2, 1), Partition({2}), 1);
  auto ctx = Q.presentation().ctx();
  // f then p f: the first step is not killed by p.
  CHECK_THROWS_AS(det_torsion(Q, chain_from_vectors(Q, {{RingElem(ctx, 1)}, {RingElem(ctx, 2)}})), InputError);
  CHECK_THROWS_AS(det_torsion(Q, chain_from_vectors(Q, {{RingElem(ctx, 2)}})), InputError);
  CHECK_THROWS_AS(det_torsion(Q, chain_from_vectors(Q, {{RingElem(ctx, 2)}, {RingElem(ctx, 2)}})), InputError);
}

TEST_CASE("semisimple modules: scalar is a plain determinant") {
  std::mt19937_64 rng(5);
  for (std::int64_t q : {2, 3, 4}) {
    for (int k = 1; k <= 3; ++k) {
      const auto Q = random_module(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)), k + 1, q, rng);
      const auto field = Q.ctx()->residue_field();
      for (const auto& chain : maximal_chains(Q)) {
        const auto c = perturb(Q, chain, rng);
        Matrix M(field, k, k);
        for (int j = 0; j < k; ++j)
          for (int i = 0; i < k; ++i) M.at(j, i) = Q.coordinate(c.vectors[static_cast<std::size_t>(j)], i).residue();
        CHECK(det_torsion(Q, c).scalar == brute::leibniz_det(M));
      }
    }
  }
}

TEST_CASE("degree is the length and the reference has scalar one") {
  std::mt19937_64 rng(9);
  for (std::int64_t q : {2, 3, 5}) {
    for (int total = 0; total <= 5; ++total) {
      for (const auto& type : partitions_of(total, 3)) {
        const auto Q = random_module(type, 3, q, rng);
        const auto line = det_torsion(Q, reference_chain(Q));
        CHECK(line.degree == total);
        CHECK(line.scalar.is_one());
      }
    }
  }
}

TEST_CASE("chain comparison coheres") {
  std::mt19937_64 rng(13);
  for (std::int64_t q : {2, 3}) {
    for (int total = 1; total <= 3; ++total) {
      for (const auto& type : partitions_of(total)) {
        CAPTURE(q);
        CAPTURE(type.to_string());
        const auto Q = random_module(type, type.length() + 1, q, rng);
        std::vector<ChainBasis> chains;
        for (const auto& c : maximal_chains(Q)) chains.push_back(perturb(Q, c, rng));
        const std::size_t m = chains.size();
        std::vector<GradedLine> lines;
        for (const auto& c : chains) lines.push_back(det_torsion(Q, c));
        std::vector<std::vector<RingElem>> cmp(m);
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b) {
            cmp[a].push_back(compare_chains(Q, chains[a], chains[b]));
            CHECK(cmp[a][b] == lines[a].scalar * lines[b].scalar.inv());
          }
        for (std::size_t a = 0; a < m; ++a) {
          CHECK(cmp[a][a].is_one());
          CHECK(lines[a].degree == total);
          for (std::size_t b = 0; b < m; ++b) {
            CHECK((cmp[a][b] * cmp[b][a]).is_one());
            for (std::size_t c = 0; c < m; ++c) CHECK((cmp[a][b] * cmp[b][c] * cmp[c][a]).is_one());
          }
        }
      }
    }
  }
}

TEST_CASE("maximal chain counts") {
  // (O/p)^2 has q + 1 flags; O/p^2 has one; (O/p)^3 has (q^2+q+1)(q+1).
  for (std::int64_t q : {2, 3}) {
    CHECK(maximal_chains(TorsionModule::of_type(ring_for_q(q, 1)->field(), Partition({1, 1}))).size() == static_cast<std::size_t>(q + 1));
    CHECK(maximal_chains(TorsionModule::of_type(ring_for_q(q, 1)->field(), Partition({2}))).size() == 1);
    CHECK(maximal_chains(TorsionModule::of_type(ring_for_q(q, 1)->field(), Partition({1, 1, 1}))).size() ==
          static_cast<std::size_t>((q * q + q + 1) * (q + 1)));
  }
}

TEST_CASE("additivity along nested lattices") {
  // Q = O^n / L'', Q' = L' / L'', Q'' = O^n / L'. Concatenating a chain of Q'
  // with lifts of a chain of Q'' gives a chain of Q; relative to the
  // concatenated reference chains the scalar is the product.
  int checked = 0;
  for (auto [n, c] : {std::pair{2, 3}, std::pair{3, 2}}) {
    auto big = ring_for_q(2, 8);
    const auto lattices = enumerate_lattices(n, c, 2);
    for (const auto& inner : lattices) {
      if (inner.colength() > 3) continue;
      for (const auto& outer : lattices) {
        if (!contains(outer, inner)) continue;
        const Matrix A = basis_of(inner, big), B = basis_of(outer, big);
        Matrix C(big, n, n);
        for (int i = 0; i < n; ++i) {
          std::vector<RingElem> x;
          REQUIRE(solve_left(B, A.row(i), x));
          C.set_row(i, x);
        }
        const TorsionModule Q{IsogenyMatrix(A)}, Qs{IsogenyMatrix(C)}, Qq{IsogenyMatrix(B)};
        REQUIRE(Qs.length() + Qq.length() == Q.length());
        auto concat = [&](const ChainBasis& sub, const ChainBasis& quo) {
          std::vector<std::vector<RingElem>> vs;
          for (const auto& v : sub.vectors) vs.push_back(vec_mul(Qs.lift(v), B));
          for (const auto& v : quo.vectors) vs.push_back(Qq.lift(v));
          return chain_from_vectors(Q, vs);
        };
        const auto base = det_torsion(Q, concat(reference_chain(Qs), reference_chain(Qq)));
        const auto subs = maximal_chains(Qs), quos = maximal_chains(Qq);
        for (std::size_t i = 0; i < subs.size() && i < 4; ++i)
          for (std::size_t j = 0; j < quos.size() && j < 4; ++j) {
            const auto whole = det_torsion(Q, concat(subs[i], quos[j]));
            const auto a = det_torsion(Qs, subs[i]), b = det_torsion(Qq, quos[j]);
            CHECK(whole.degree == a.degree + b.degree);
            CHECK(whole.scalar == base.scalar * a.scalar * b.scalar);
            ++checked;
          }
      }
    }
  }
  CHECK(checked > 100);
}

#include "wittgrass/demazure.hpp"

#include <algorithm>
#include <limits>

#include "wittgrass/errors.hpp"
#include "wittgrass/workbound.hpp"

namespace wittgrass {

std::uint64_t gauss_binomial(int n, int k, std::int64_t q) {
  if (n < 0 || k < 0 || k > n) throw InputError("gauss_binomial: need 0 <= k <= n");
  if (q < 2) throw InputError("gauss_binomial: q must be at least 2");
  // Pascal-type recursion [n,k] = [n-1,k-1] + q^k [n-1,k], exact in uint64.
  std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      const std::uint64_t qj = sat_pow(static_cast<std::uint64_t>(q), j);
      const std::uint64_t term = sat_mul(qj, row[static_cast<std::size_t>(j)]);
      const std::uint64_t sum = sat_add(row[static_cast<std::size_t>(j) - 1], term);
      if (qj == kMax || term == kMax || sum == kMax) throw WorkBoundExceeded("gauss_binomial: value exceeds 64 bits");
      row[static_cast<std::size_t>(j)] = sum;
    }
  }
  return row[static_cast<std::size_t>(k)];
}

std::vector<Matrix> subspaces(const CtxPtr& field_ctx, int n, int k) {
  if (field_ctx->precision() != 1) throw ContextMismatch("subspaces: expected a residue field");
  if (k < 0 || k > n) throw InputError("subspaces: need 0 <= k <= n");
  check_work(gauss_binomial(n, k, field_ctx->q()), "subspace enumeration");
  const auto elems = field_elements(field_ctx);
  const auto q = elems.size();
  std::vector<Matrix> out;
  std::vector<int> pivots(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) pivots[static_cast<std::size_t>(r)] = r;
  while (true) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int pc : pivots) is_pivot[static_cast<std::size_t>(pc)] = true;
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < k; ++r)
      for (int j = pivots[static_cast<std::size_t>(r)] + 1; j < n; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) free.emplace_back(r, j);
    std::vector<std::size_t> digit(free.size(), 0);
    while (true) {
      Matrix S(field_ctx, k, n);
      for (int r = 0; r < k; ++r) S.at(r, pivots[static_cast<std::size_t>(r)]) = RingElem(field_ctx, 1);
      for (std::size_t f = 0; f < free.size(); ++f) S.at(free[f].first, free[f].second) = elems[digit[f]];
      out.push_back(std::move(S));
      std::size_t f = 0;
      while (f < digit.size() && ++digit[f] == q) digit[f++] = 0;
      if (f == digit.size()) break;
    }
    // next combination
    int r = k - 1;
    while (r >= 0 && pivots[static_cast<std::size_t>(r)] == n - k + r) --r;
    if (r < 0) break;
    ++pivots[static_cast<std::size_t>(r)];
    for (int s = r + 1; s < k; ++s) pivots[static_cast<std::size_t>(s)] = pivots[static_cast<std::size_t>(s) - 1] + 1;
  }
  return out;
}

int chain_window(const Partition& lambda) { return std::max(lambda.largest(), 1); }

std::uint64_t chain_count(int n, const Partition& lambda, std::int64_t q) {
  std::uint64_t total = 1;
  for (int i = 0; i < lambda.largest(); ++i) {
    total = sat_mul(total, gauss_binomial(n, lambda.row_count(i), q));
  }
  return total;
}

namespace {

struct Step {
  Matrix lifted;               // subspace rows over O/p^c
  std::vector<int> nonpivots;  // columns to keep as p * b_j
};

class ChainBuilder {
 public:
  using Prune = std::function<bool(const LatticeCanon&)>;

  ChainBuilder(int n, Partition lambda, std::int64_t q) : n_(n), lambda_(std::move(lambda)) {
    if (n < 1) throw InputError("demazure: n must be positive");
    if (lambda_.length() > n) throw InputError("demazure: type " + lambda_.to_string() + " has more than n parts");
    c_ = chain_window(lambda_);
    ctx_ = ring_for_q(q, c_);
    window_ = Window{0, c_};
    check_work(chain_count(n, lambda_, q), "demazure chain enumeration");
    const auto field = ctx_->residue_field();
    auto& by_dim = storage_;
    for (int i = 0; i < lambda_.largest(); ++i) {
      const int k = n - lambda_.row_count(i);
      if (!by_dim.count(k)) {
        std::vector<Step> steps;
        for (const auto& S : subspaces(field, n, k)) {
          Step st{S.lift_to(ctx_), {}};
          std::vector<bool> pivot(static_cast<std::size_t>(n), false);
          for (int r = 0; r < k; ++r) {
            for (int j = 0; j < n; ++j) {
              if (!S.at(r, j).is_zero()) {
                pivot[static_cast<std::size_t>(j)] = true;
                break;
              }
            }
          }
          for (int j = 0; j < n; ++j)
            if (!pivot[static_cast<std::size_t>(j)]) st.nonpivots.push_back(j);
          steps.push_back(std::move(st));
        }
        by_dim.emplace(k, std::move(steps));
      }
      steps_.push_back(&by_dim.at(k));
    }
  }

  int steps() const { return lambda_.largest(); }
  std::size_t first_choices() const { return steps() == 0 ? 1 : steps_[0]->size(); }
  const CtxPtr& ctx() const { return ctx_; }
  const Window& window() const { return window_; }
  const Partition& lambda() const { return lambda_; }

  // Runs every chain whose first step is choice `first`.
  void run(std::size_t first, const std::function<void(const FiltrationChain&)>& visit, const Prune& prune) const {
    FiltrationChain chain;
    chain.lambda = lambda_;
    chain.chain.push_back(LatticeCanon::full(ctx_, n_, window_));
    const Matrix B = Matrix::identity(ctx_, n_);
    if (steps() == 0) {
      visit(chain);
      return;
    }
    descend(0, B, first, chain, visit, prune);
  }

 private:
  void descend(int i, const Matrix& B, std::size_t choice, FiltrationChain& chain,
               const std::function<void(const FiltrationChain&)>& visit, const Prune& prune) const {
    const Step& st = (*steps_[static_cast<std::size_t>(i)])[choice];
    Matrix next = st.lifted * B;
    for (int j : st.nonpivots) next.append_row(B.row(j));
    for (int r = st.lifted.rows(); r < n_; ++r) {
      auto row = next.row(r);
      for (auto& e : row) e = e.times_p_pow(1);
      next.set_row(r, row);
    }
    auto E = LatticeCanon::canonicalize(next, window_);
    if (prune && prune(E)) return;
    chain.chain.push_back(std::move(E));
    if (i + 1 == steps()) {
      visit(chain);
    } else {
      const auto& options = *steps_[static_cast<std::size_t>(i) + 1];
      for (std::size_t s = 0; s < options.size(); ++s) descend(i + 1, next, s, chain, visit, prune);
    }
    chain.chain.pop_back();
  }

  int n_;
  Partition lambda_;
  int c_ = 1;
  CtxPtr ctx_;
  Window window_;
  std::map<int, std::vector<Step>> storage_;
  std::vector<const std::vector<Step>*> steps_;
};

}  // namespace

void for_each_chain(int n, const Partition& lambda, std::int64_t q,
                    const std::function<void(const FiltrationChain&)>& visit) {
  ChainBuilder builder(n, lambda, q);
  for (std::size_t f = 0; f < builder.first_choices(); ++f) builder.run(f, visit, {});
}

std::vector<FiltrationChain> enumerate_chains(int n, const Partition& lambda, std::int64_t q, int workers) {
  ChainBuilder builder(n, lambda, q);
  std::vector<std::vector<FiltrationChain>> parts(builder.first_choices());
  parallel_for(parts.size(), workers, [&](std::size_t f) {
    builder.run(f, [&](const FiltrationChain& ch) { parts[f].push_back(ch); }, {});
  });
  std::vector<FiltrationChain> out;
  for (auto& part : parts)
    for (auto& ch : part) out.push_back(std::move(ch));
  return out;
}

std::vector<FiltrationChain> demazure_fiber(const LatticeCanon& M, const Partition& lambda, std::int64_t q) {
  ChainBuilder builder(M.n(), lambda, q);
  if (!(M.window() == builder.window()) || !M.ctx()->same_ring(*builder.ctx()))
    throw InputError("demazure_fiber: lattice must live in the window [0, " + std::to_string(builder.window().b) + "] over F_" +
                     std::to_string(q));
  std::vector<FiltrationChain> out;
  auto prune = [&](const LatticeCanon& E) { return !contains(E, M); };
  for (std::size_t f = 0; f < builder.first_choices(); ++f) {
    builder.run(f, [&](const FiltrationChain& ch) {
      if (ch.endpoint() == M) out.push_back(ch);
    }, prune);
  }
  return out;
}

void validate_chain(const FiltrationChain& chain, int n) {
  const auto& E = chain.chain;
  const auto& lambda = chain.lambda;
  if (static_cast<int>(E.size()) != lambda.largest() + 1) throw InputError("chain: wrong number of members");
  for (const auto& L : E) {
    if (L.n() != n) throw InputError("chain: member of wrong rank");
    if (!(L.window() == E.front().window())) throw InputError("chain: members in different windows");
  }
  if (E.front().colength() != 0) throw InputError("chain: E_0 is not the top lattice");
  for (std::size_t i = 0; i + 1 < E.size(); ++i) {
    const auto pE = LatticeCanon::canonicalize(E[i].gens().times_p_pow(1), E[i].window());
    if (!contains(E[i], E[i + 1])) throw InputError("chain: E_" + std::to_string(i + 1) + " not inside E_" + std::to_string(i));
    if (!contains(E[i + 1], pE)) throw InputError("chain: p E_" + std::to_string(i) + " not inside E_" + std::to_string(i + 1));
    if (E[i + 1].colength() - E[i].colength() != lambda.row_count(static_cast<int>(i)))
      throw InputError("chain: graded piece " + std::to_string(i) + " has the wrong dimension");
  }
}

std::uint64_t StratumFibers::chains() const {
  std::uint64_t total = 0;
  for (const auto& [size, count] : histogram) total += size * count;
  return total;
}

FiberTable demazure_fibers(int n, const Partition& lambda, std::int64_t q, int workers) {
  ChainBuilder builder(n, lambda, q);
  FiberTable table;
  table.n = n;
  table.c = builder.window().b;
  table.q = q;
  table.lambda = lambda;
  table.total_chains = chain_count(n, lambda, q);

  using Tally = std::map<std::vector<std::int64_t>, std::pair<LatticeCanon, std::uint64_t>>;
  std::vector<Tally> parts(builder.first_choices());
  parallel_for(parts.size(), workers, [&](std::size_t f) {
    builder.run(f, [&](const FiltrationChain& ch) {
      auto [it, fresh] = parts[f].try_emplace(ch.endpoint().key(), ch.endpoint(), 0);
      ++it->second.second;
    }, {});
  });
  Tally all;
  for (auto& part : parts) {
    for (auto& [key, entry] : part) {
      auto [it, fresh] = all.try_emplace(key, entry.first, 0);
      it->second.second += entry.second;
    }
  }
  std::uint64_t seen = 0;
  for (auto& [key, entry] : all) {
    auto& stratum = table.strata[entry.first.cokernel_type()];
    stratum.points.emplace_back(entry.first, entry.second);
    ++stratum.histogram[entry.second];
    seen += entry.second;
  }
  if (seen != table.total_chains) throw InternalInvariantError("demazure_fibers: chain count mismatch");
  return table;
}

std::vector<int> quot_thresholds(const Partition& type_q, const Partition& lambda) {
  const int top = std::max(type_q.largest(), lambda.largest());
  const int dim_f = type_q.row_count(0) - lambda.row_count(0);
  std::vector<int> a;
  for (int m = 0; m <= top; ++m) {
    int value = dim_f;
    for (int i = m + 1; i < top; ++i) value += type_q.row_count(i) - lambda.row_count(i);
    a.push_back(value);
  }
  return a;
}

namespace {

// Rows of F in Smith coordinates of Q/p, one column per k with d_k > 0.
Matrix quotient_coordinates(const TorsionModule& Q, const Matrix& F) {
  const auto field = Q.presentation().ctx()->residue_field();
  if (F.cols() != Q.rank()) throw InputError("subspace has " + std::to_string(F.cols()) + " columns, expected " + std::to_string(Q.rank()));
  if (!F.ctx()->same_ring(*field)) throw ContextMismatch("subspace must be given over the residue field");
  const Matrix Y = F * Q.presentation().smith().V.reduce_to(field);
  int r = 0;
  for (int d : Q.divisors()) r += d > 0 ? 1 : 0;
  Matrix out(field, F.rows(), r);
  int col = 0;
  for (int k = 0; k < Q.rank(); ++k) {
    if (Q.divisors()[static_cast<std::size_t>(k)] == 0) continue;
    for (int i = 0; i < F.rows(); ++i) out.at(i, col) = Y.at(i, k);
    ++col;
  }
  return out;
}

int rank_over_field(const Matrix& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  return howell_form(M).rows.rows();
}

}  // namespace

int subspace_dimension(const TorsionModule& Q, const Matrix& F) { return rank_over_field(quotient_coordinates(Q, F)); }

bool quot_stratum_predicate(const TorsionModule& Q, const Partition& lambda, const Matrix& F) {
  const auto& tq = Q.type();
  if (lambda.total() != tq.total())
    throw InputError("quot predicate: |" + lambda.to_string() + "| differs from the length of Q");
  const int want = tq.row_count(0) - lambda.row_count(0);
  const Matrix Y = quotient_coordinates(Q, F);
  const int dim_f = rank_over_field(Y);
  if (want < 0 || dim_f != want)
    throw InputError("quot predicate: subspace has dimension " + std::to_string(dim_f) + ", expected " + std::to_string(want));
  // Column order of Y follows the Smith coordinates with d_k > 0, d decreasing.
  std::vector<int> depth;
  for (int d : Q.divisors())
    if (d > 0) depth.push_back(d);
  const auto a = quot_thresholds(tq, lambda);
  const auto field = Y.ctx();
  for (int m = 0; m < static_cast<int>(a.size()); ++m) {
    // F^m: coordinates with d_k <= m.
    Matrix stacked = Y;
    int dim_fm = 0;
    for (std::size_t col = 0; col < depth.size(); ++col) {
      if (depth[col] > m) continue;
      auto e = zero_vector(field, static_cast<int>(depth.size()));
      e[col] = RingElem(field, 1);
      stacked.append_row(e);
      ++dim_fm;
    }
    const int meet = dim_f + dim_fm - rank_over_field(stacked);
    if (meet < a[static_cast<std::size_t>(m)]) return false;
  }
  return true;
}

Partition fil1_type(const TorsionModule& Q, const Matrix& F) {
  const auto& pctx = Q.presentation().ctx();
  std::vector<std::vector<RingElem>> gens;
  for (int i = 0; i < F.rows(); ++i) {
    auto x = F.row(i);
    for (auto& e : x) e = e.lift_to(pctx);
    gens.push_back(Q.embed(x));
  }
  for (int k = 0; k < Q.rank(); ++k) gens.push_back(Q.reference_vector(k, 1));
  return Q.span(gens).submodule_type();
}

}  // namespace wittgrass

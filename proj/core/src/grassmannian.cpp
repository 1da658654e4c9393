#include "wittgrass/grassmannian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wittgrass/workbound.hpp"

namespace wittgrass {

namespace {

void check_params(int n, int c, std::int64_t q) {
  if (n < 1) throw InputError("grassmannian: n must be >= 1");
  if (c < 1) throw InputError("grassmannian: window size c must be >= 1");
  if (!prime_power(q)) throw InputError("grassmannian: q = " + std::to_string(q) + " is not a prime power");
}

std::vector<std::vector<int>> profiles(int n, int c, std::optional<int> colength) {
  std::vector<std::vector<int>> out;
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int sum) {
    if (i == n) {
      if (!colength || sum == *colength) out.push_back(k);
      return;
    }
    for (int v = 0; v <= c; ++v) {
      if (colength && sum + v > *colength) break;
      k[static_cast<std::size_t>(i)] = v;
      rec(i + 1, sum + v);
    }
  };
  rec(0, 0);
  return out;
}

// All elements of O/p^k as canonical representatives inside ctx.
std::vector<RingElem> residues(const CtxPtr& ctx, int k) {
  std::vector<RingElem> out;
  const std::int64_t pk = k >= ctx->precision() ? ctx->modulus() : ctx->p_pow(k);
  const int d = ctx->degree();
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(d), 0);
  while (true) {
    out.emplace_back(ctx, coeffs);
    int pos = 0;
    while (pos < d && ++coeffs[static_cast<std::size_t>(pos)] == pk) coeffs[static_cast<std::size_t>(pos++)] = 0;
    if (pos == d) break;
  }
  return out;
}

template <class Visit>
void for_each_in_profile(const CtxPtr& ctx, const std::vector<int>& k, Visit&& visit) {
  const int n = static_cast<int>(k.size());
  const int c = ctx->precision();
  Matrix H(ctx, n, n);
  for (int i = 0; i < n; ++i) H.at(i, i) = RingElem(ctx, 1).times_p_pow(k[static_cast<std::size_t>(i)]);
  std::vector<std::pair<int, int>> slots;
  std::vector<std::vector<RingElem>> choices;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (k[static_cast<std::size_t>(j)] == 0) continue;
      slots.emplace_back(i, j);
      choices.push_back(residues(ctx, k[static_cast<std::size_t>(j)]));
    }
  const int target = std::accumulate(k.begin(), k.end(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t s) {
    if (s == slots.size()) {
      auto L = LatticeCanon::canonicalize(H, Window{0, c});
      // Lattices not containing p^c O^n collapse to a smaller colength.
      if (L.colength() == target) visit(std::move(L));
      return;
    }
    for (const auto& x : choices[s]) {
      H.at(slots[s].first, slots[s].second) = x;
      rec(s + 1);
    }
  };
  rec(0);
}

}  // namespace

CtxPtr ring_for_q(std::int64_t q, int precision) {
  const auto pd = prime_power(q);
  if (!pd) throw InputError("q = " + std::to_string(q) + " is not a prime power");
  return GaloisRingCtx::make(pd->first, pd->second, precision);
}

std::uint64_t lattice_candidate_count(int n, int c, std::int64_t q, std::optional<int> colength) {
  check_params(n, c, q);
  // ways[s] = saturated candidate count over the first j columns with sum s.
  const int max_sum = n * c;
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(max_sum) + 1, 0);
  ways[0] = 1;
  for (int j = 0; j < n; ++j) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (int s = 0; s <= max_sum; ++s) {
      if (ways[static_cast<std::size_t>(s)] == 0) continue;
      for (int k = 0; k <= c && s + k <= max_sum; ++k) {
        const auto w = sat_mul(ways[static_cast<std::size_t>(s)], sat_pow(static_cast<std::uint64_t>(q), j * k));
        next[static_cast<std::size_t>(s + k)] = sat_add(next[static_cast<std::size_t>(s + k)], w);
      }
    }
    ways = std::move(next);
  }
  if (colength) return *colength >= 0 && *colength <= max_sum ? ways[static_cast<std::size_t>(*colength)] : 0;
  std::uint64_t total = 0;
  for (auto w : ways) total = sat_add(total, w);
  return total;
}

std::vector<LatticeCanon> enumerate_lattices(int n, int c, std::int64_t q, const EnumOptions& options) {
  check_work(lattice_candidate_count(n, c, q, options.colength), "enumerate_lattices");
  const auto ctx = ring_for_q(q, c);
  const auto profs = profiles(n, c, options.colength);
  std::vector<std::vector<std::pair<std::vector<std::int64_t>, LatticeCanon>>> parts(profs.size());
  parallel_for(profs.size(), options.workers, [&](std::size_t t) {
    for_each_in_profile(ctx, profs[t], [&](LatticeCanon L) {
      auto key = L.key();
      parts[t].emplace_back(std::move(key), std::move(L));
    });
  });
  std::vector<std::pair<std::vector<std::int64_t>, LatticeCanon>> all;
  for (auto& part : parts)
    for (auto& item : part) all.push_back(std::move(item));
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].first == all[i - 1].first) throw InternalInvariantError("enumerate_lattices: duplicate lattice");
  }
  std::vector<LatticeCanon> out;
  out.reserve(all.size());
  for (auto& item : all) out.push_back(std::move(item.second));
  return out;
}

std::uint64_t StratumTable::total() const {
  std::uint64_t t = 0;
  for (const auto& [lambda, count] : counts) t += count;
  return t;
}

std::uint64_t StratumTable::count(const Partition& lambda) const {
  const auto it = counts.find(lambda);
  return it == counts.end() ? 0 : it->second;
}

StratumTable stratum_counts(int n, int c, std::int64_t q, const EnumOptions& options) {
  check_work(lattice_candidate_count(n, c, q, options.colength), "stratum_counts");
  const auto ctx = ring_for_q(q, c);
  const auto profs = profiles(n, c, options.colength);
  std::vector<std::map<Partition, std::uint64_t>> parts(profs.size());
  parallel_for(profs.size(), options.workers, [&](std::size_t t) {
    for_each_in_profile(ctx, profs[t], [&](const LatticeCanon& L) { ++parts[t][L.cokernel_type()]; });
  });
  StratumTable table{n, c, q, {}};
  for (const auto& part : parts)
    for (const auto& [lambda, count] : part) table.counts[lambda] += count;
  return table;
}

std::uint64_t count_leq(const StratumTable& table, const Partition& lambda) {
  if (lambda.length() > table.n || lambda.largest() > table.c) {
    throw InputError("count_leq: type " + lambda.to_string() + " does not fit n = " + std::to_string(table.n) +
                     ", c = " + std::to_string(table.c));
  }
  std::uint64_t total = 0;
  for (const auto& [mu, count] : table.counts) {
    if (dominates(lambda, mu)) total += count;
  }
  return total;
}

int kottwitz(const Matrix& G, int shift) {
  if (G.rows() != G.cols()) throw InputError("kottwitz: matrix is not square");
  const auto s = smith_normal_form(G);
  int v = 0;
  for (int e : s.exponents) {
    if (e >= G.ctx()->precision()) throw PrecisionError("kottwitz: determinant vanishes at the stored precision");
    v += e;
  }
  if (v >= G.ctx()->precision()) throw PrecisionError("kottwitz: det valuation not determined at the stored precision");
  return v - G.rows() * shift;
}

}  // namespace wittgrass

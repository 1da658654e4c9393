#pragma once

// Brute-force oracles shared by the test binaries. Everything here works on
// explicit element sets and never calls the normal-form code under test.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <algorithm>
#include <functional>
#include <map>

#include "wittgrass/demazure.hpp"
#include "wittgrass/linalg.hpp"

namespace brute {

using wittgrass::CtxPtr;
using wittgrass::Matrix;
using wittgrass::RingElem;
using Vec = std::vector<RingElem>;
using Key = std::vector<std::int64_t>;
using KeySet = std::set<Key>;

inline Key key_of(const Vec& v) {
  Key k;
  for (const auto& x : v)
    for (auto c : x.coeffs()) k.push_back(c);
  return k;
}

// All elements of O/p^N.
inline std::vector<RingElem> ring_elements(const CtxPtr& ctx) {
  std::vector<RingElem> out;
  const int d = ctx->degree();
  std::vector<std::int64_t> c(static_cast<std::size_t>(d), 0);
  while (true) {
    out.emplace_back(ctx, c);
    int pos = 0;
    while (pos < d && ++c[static_cast<std::size_t>(pos)] == ctx->modulus()) c[static_cast<std::size_t>(pos++)] = 0;
    if (pos == d) break;
  }
  return out;
}

// All vectors of (O/p^N)^n.
inline std::vector<Vec> all_vectors(const CtxPtr& ctx, int n) {
  const auto elems = ring_elements(ctx);
  std::vector<Vec> out{Vec{}};
  for (int i = 0; i < n; ++i) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (const auto& e : elems) {
        auto w = v;
        w.push_back(e);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec scale(const RingElem& s, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x = s * x;
  return r;
}

// The submodule generated by the rows, as an explicit set: closure under
// adding every scalar multiple of every generator.
inline std::set<Key> span(const CtxPtr& ctx, int n, const std::vector<Vec>& gens) {
  const auto elems = ring_elements(ctx);
  std::vector<Vec> members{Vec(static_cast<std::size_t>(n), RingElem(ctx))};
  std::set<Key> seen{key_of(members.front())};
  for (const auto& g : gens) {
    std::vector<Vec> multiples;
    for (const auto& s : elems) multiples.push_back(scale(s, g));
    const std::size_t base = members.size();
    for (std::size_t i = 0; i < base; ++i)
      for (const auto& m : multiples) {
        auto v = add(members[i], m);
        if (seen.insert(key_of(v)).second) members.push_back(std::move(v));
      }
  }
  return seen;
}

inline std::vector<Vec> rows_of(const Matrix& A) {
  std::vector<Vec> out;
  for (int i = 0; i < A.rows(); ++i) out.push_back(A.row(i));
  return out;
}

inline std::set<Key> row_span(const Matrix& A) { return span(A.ctx(), A.cols(), rows_of(A)); }

inline Matrix random_matrix(const CtxPtr& ctx, int rows, int cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, ctx->modulus() - 1);
  Matrix A(ctx, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      std::vector<std::int64_t> c;
      for (int k = 0; k < ctx->degree(); ++k) c.push_back(dist(rng));
      A.at(i, j) = RingElem(ctx, c);
    }
  return A;
}

// Random matrix whose entries have valuation >= min_val with some probability mass on p-multiples.
inline Matrix random_sparse_valued(const CtxPtr& ctx, int rows, int cols, std::mt19937_64& rng) {
  Matrix A = random_matrix(ctx, rows, cols, rng);
  std::uniform_int_distribution<int> vd(0, ctx->precision());
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A.at(i, j) = A.at(i, j).times_p_pow(vd(rng));
  return A;
}

// Random element of O/p^N drawn coefficient-wise.
inline RingElem random_element(const CtxPtr& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, ctx->modulus() - 1);
  std::vector<std::int64_t> c;
  for (int k = 0; k < ctx->degree(); ++k) c.push_back(dist(rng));
  return RingElem(ctx, c);
}

// Random invertible matrix: product of elementary matrices and unit scalings.
inline Matrix random_invertible(const CtxPtr& ctx, int n, std::mt19937_64& rng) {
  Matrix M = Matrix::identity(ctx, n);
  std::uniform_int_distribution<int> pick(0, std::max(n - 1, 0));
  for (int step = 0; step < 4 * n + 2 && n > 0; ++step) {
    const int a = pick(rng), b = pick(rng);
    if (a != b) {
      const RingElem f = random_element(ctx, rng);
      for (int j = 0; j < n; ++j) M.at(a, j) += f * M.at(b, j);
    } else {
      RingElem u = random_element(ctx, rng);
      if (!u.is_unit()) u = u + RingElem(ctx, 1);
      if (!u.is_unit()) continue;
      for (int j = 0; j < n; ++j) M.at(a, j) *= u;
    }
    if (step % 3 == 0 && n > 1) M.swap_rows(pick(rng), pick(rng));
  }
  return M;
}

// Leibniz determinant.
inline RingElem leibniz_det(const Matrix& A) {
  const int n = A.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  RingElem total(A.ctx());
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    RingElem term(A.ctx(), inversions % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term *= A.at(i, perm[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// log_q of a set size that must be a power of q.
inline int log_q(std::size_t size, std::int64_t q) {
  int k = 0;
  std::size_t s = 1;
  while (s < size) {
    s *= static_cast<std::size_t>(q);
    ++k;
  }
  return s == size ? k : -1;
}

// All submodules of (O/p^c)^n as explicit sets.
inline std::vector<KeySet> submodules(const CtxPtr& ctx, int n) {
  const auto vecs = all_vectors(ctx, n);
  std::vector<KeySet> cyclic;
  std::set<KeySet> cyc_seen;
  for (const auto& v : vecs) {
    auto s = span(ctx, n, {v});
    if (cyc_seen.insert(s).second) cyclic.push_back(std::move(s));
  }
  std::set<KeySet> seen;
  std::vector<KeySet> todo{KeySet{key_of(vecs.front())}};
  seen.insert(todo.front());
  for (std::size_t at = 0; at < todo.size(); ++at) {
    for (const auto& C : cyclic) {
      // sum of two submodules given as sets
      KeySet sum;
      for (const auto& a : todo[at])
        for (const auto& b : C) {
          Key k(a.size());
          for (std::size_t i = 0; i < a.size(); ++i) k[i] = (a[i] + b[i]) % ctx->modulus();
          sum.insert(std::move(k));
        }
      if (seen.insert(sum).second) todo.push_back(std::move(sum));
    }
  }
  return todo;
}

inline bool subset(const KeySet& a, const KeySet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline KeySet times_p(const KeySet& a, const CtxPtr& ctx) {
  KeySet out;
  for (auto k : a) {
    for (auto& x : k) x = (x * ctx->p()) % ctx->modulus();
    out.insert(std::move(k));
  }
  return out;
}

// Brute-force chain count grouped by endpoint set (degree 1 fields only).
inline std::map<KeySet, std::uint64_t> chain_fibers(int n, const wittgrass::Partition& lambda, std::int64_t q) {
  auto ctx = wittgrass::ring_for_q(q, wittgrass::chain_window(lambda));
  const auto subs = submodules(ctx, n);
  KeySet top;
  for (const auto& v : all_vectors(ctx, n)) top.insert(key_of(v));
  std::map<KeySet, std::uint64_t> out;
  std::function<void(const KeySet&, int)> go = [&](const KeySet& E, int i) {
    if (i == lambda.largest()) {
      ++out[E];
      return;
    }
    std::size_t drop = 1;
    for (int r = 0; r < lambda.row_count(i); ++r) drop *= static_cast<std::size_t>(q);
    const auto pE = times_p(E, ctx);
    for (const auto& F : subs)
      if (F.size() * drop == E.size() && subset(F, E) && subset(pE, F)) go(F, i + 1);
  };
  go(top, 0);
  return out;
}

// Type of a finite module given as a set, from the sizes |p^i M|.
inline wittgrass::Partition type_from_sets(const KeySet& M, const CtxPtr& ctx) {
  std::vector<std::size_t> sizes{M.size()};
  KeySet cur = M;
  while (cur.size() > 1) {
    cur = times_p(cur, ctx);
    sizes.push_back(cur.size());
  }
  // rows[i] = log_q |p^i M / p^{i+1} M|
  std::vector<int> rows;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) rows.push_back(log_q(sizes[i] / sizes[i + 1], ctx->q()));
  std::vector<int> parts;
  for (int j = 0; !rows.empty() && j < rows.front(); ++j) {
    int len = 0;
    for (int r : rows) len += r > j ? 1 : 0;
    parts.push_back(len);
  }
  return wittgrass::Partition(parts);
}

}  // namespace brute

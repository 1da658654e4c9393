#include "wittgrass/detline.hpp"

#include <deque>
#include <functional>
#include <map>

#include "wittgrass/errors.hpp"
#include "wittgrass/workbound.hpp"

namespace wittgrass {

BraidResult tensor_braid(const GradedLine& a, const GradedLine& b) {
  BraidResult r;
  r.line = GradedLine{a.scalar * b.scalar, a.degree + b.degree};
  r.swap_sign = (a.degree % 2 != 0 && b.degree % 2 != 0) ? -1 : 1;
  return r;
}

GradedLine det_vect(const Matrix& change) {
  if (change.rows() != change.cols()) throw InputError("det_vect: change of basis must be square");
  const auto field = change.ctx()->residue_field();
  const auto d = change.rows() == 0 ? RingElem(field, 1) : determinant(change).residue();
  if (d.is_zero()) throw NotAUnit("det_vect: change of basis is singular");
  return GradedLine{d, change.rows()};
}

namespace {

using Vec = std::vector<RingElem>;

LatticeCanon prefix_span(const TorsionModule& Q, const std::vector<Vec>& w, std::size_t count) {
  if (count == 0) return Q.zero();
  return Q.span(std::vector<Vec>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(count)));
}

Vec times_p(Vec v) {
  for (auto& x : v) x = x.times_p_pow(1);
  return v;
}

// Coefficients x with x * rows = target, or false.
bool solve_rows(const TorsionModule& Q, const std::vector<Vec>& rows, const Vec& target, Vec& x) {
  if (rows.empty()) {
    x.clear();
    return is_zero_vector(target);
  }
  return solve_left(Matrix::from_rows(Q.ctx(), rows, Q.rank()), target, x);
}

}  // namespace

ChainBasis chain_from_vectors(const TorsionModule& Q, const std::vector<std::vector<RingElem>>& vectors) {
  ChainBasis chain;
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != Q.rank()) throw InputError("chain vector has the wrong length");
    Vec x;
    if (!v.empty() && v.front().ctx()->precision() < Q.exponent())
      throw PrecisionError("chain vector known only modulo p^" + std::to_string(v.front().ctx()->precision()));
    for (const auto& e : v) x.push_back(e.ctx()->precision() >= Q.presentation().precision() ? e.reduce_to(Q.presentation().ctx())
                                                                                              : e.lift_to(Q.presentation().ctx()));
    chain.vectors.push_back(Q.embed(x));
  }
  return chain;
}

void validate_chain_basis(const TorsionModule& Q, const ChainBasis& chain) {
  const auto& w = chain.vectors;
  if (static_cast<int>(w.size()) != Q.length())
    throw InputError("chain has " + std::to_string(w.size()) + " steps, module length is " + std::to_string(Q.length()));
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (static_cast<int>(w[j].size()) != Q.rank() || !w[j].front().ctx()->same_ring(*Q.ctx()))
      throw InputError("chain vector " + std::to_string(j + 1) + " is not an element of the module");
    if (!Q.whole().contains_vector(w[j])) throw InputError("chain vector " + std::to_string(j + 1) + " is not in the module");
    const auto G = prefix_span(Q, w, j);
    if (G.contains_vector(w[j])) throw InputError("chain step " + std::to_string(j + 1) + " does not grow");
    if (!G.contains_vector(times_p(w[j]))) throw InputError("chain step " + std::to_string(j + 1) + " is not killed by p");
  }
}

ChainBasis reference_chain(const TorsionModule& Q) {
  ChainBasis chain;
  for (int i = Q.exponent() - 1; i >= 0; --i)
    for (int k = 0; k < Q.rank(); ++k)
      if (Q.divisors()[static_cast<std::size_t>(k)] > i) chain.vectors.push_back(Q.reference_vector(k, i));
  return chain;
}

GradedLine det_torsion(const TorsionModule& Q, const ChainBasis& chain) {
  validate_chain_basis(Q, chain);
  const auto field = Q.ctx()->residue_field();
  const auto& w = chain.vectors;
  const int c = Q.exponent();
  const auto& d = Q.divisors();

  // Depth of w_j: largest i with w_j in G_{j-1} + p^i Q; its image in
  // p^i Q / p^{i+1} Q is read off the p^i f_k coefficients.
  std::vector<int> depth(w.size());
  std::vector<Vec> coords(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    std::vector<Vec> base(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
    Vec found;
    int best = -1;
    for (int i = 0; i < c; ++i) {
      auto rows = base;
      std::vector<int> ks;
      for (int k = 0; k < Q.rank(); ++k)
        if (d[static_cast<std::size_t>(k)] > i) {
          rows.push_back(Q.reference_vector(k, i));
          ks.push_back(k);
        }
      Vec x;
      if (!solve_rows(Q, rows, w[j], x)) break;
      best = i;
      found.clear();
      for (std::size_t t = 0; t < ks.size(); ++t) found.push_back(x[j + t].residue());
    }
    if (best < 0) throw InternalInvariantError("det_torsion: chain vector outside the module");
    depth[j] = best;
    coords[j] = std::move(found);
  }

  // Sign of the stable sort putting deeper vectors first.
  int inversions = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (depth[a] < depth[b]) ++inversions;
  RingElem scalar(field, inversions % 2 == 0 ? 1 : -1);

  for (int i = 0; i < c; ++i) {
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (depth[j] == i) rows.push_back(coords[j]);
    const int dim = Q.type().row_count(i);
    if (static_cast<int>(rows.size()) != dim) throw InternalInvariantError("det_torsion: graded piece has the wrong dimension");
    if (dim == 0) continue;
    const auto piece = determinant(Matrix::from_rows(field, rows, dim));
    if (piece.is_zero()) throw InternalInvariantError("det_torsion: graded basis is singular");
    scalar = scalar * piece;
  }
  return GradedLine{scalar, Q.length()};
}

namespace {

std::vector<std::int64_t> flag_key(const TorsionModule& Q, const std::vector<Vec>& w) {
  std::vector<std::int64_t> key;
  for (std::size_t j = 1; j < w.size(); ++j) {
    const auto part = prefix_span(Q, w, j).key();
    key.push_back(static_cast<std::int64_t>(part.size()));
    key.insert(key.end(), part.begin(), part.end());
  }
  return key;
}

}  // namespace

RingElem compare_chains(const TorsionModule& Q, const ChainBasis& a, const ChainBasis& b) {
  validate_chain_basis(Q, a);
  validate_chain_basis(Q, b);
  const auto field = Q.ctx()->residue_field();
  const auto lifts = [&] {
    std::vector<RingElem> out;
    for (const auto& t : field_elements(field)) out.push_back(t.lift_to(Q.ctx()));
    return out;
  }();

  struct Node {
    std::vector<Vec> w;
    RingElem phi;  // chain element of w = phi * chain element of a
  };
  const auto target = flag_key(Q, b.vectors);
  std::map<std::vector<std::int64_t>, bool> seen;
  std::deque<Node> queue{Node{a.vectors, RingElem(field, 1)}};
  seen[flag_key(Q, a.vectors)] = true;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    const auto& w = node.w;
    if (flag_key(Q, w) == target) {
      // Same flag: b_j = r_j w_j modulo G_{j-1}.
      RingElem prod = node.phi;
      for (std::size_t j = 0; j < w.size(); ++j) {
        std::vector<Vec> rows{w[j]};
        rows.insert(rows.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
        Vec x;
        if (!solve_rows(Q, rows, b.vectors[j], x)) throw InternalInvariantError("compare_chains: flags disagree");
        prod = prod * x[0].residue();
      }
      if (prod.is_zero()) throw InternalInvariantError("compare_chains: degenerate graded ratio");
      return prod.inv();
    }
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      // Exchange is possible when G_{j+1} / G_{j-1} is killed by p.
      if (!prefix_span(Q, w, j).contains_vector(times_p(w[j + 1]))) continue;
      for (const auto& t : lifts) {
        auto next = w;
        Vec moved = w[j + 1];
        for (int k = 0; k < Q.rank(); ++k) moved[static_cast<std::size_t>(k)] += t * w[j][static_cast<std::size_t>(k)];
        next[j] = std::move(moved);
        next[j + 1] = w[j];
        auto key = flag_key(Q, next);
        if (seen.count(key)) continue;
        seen[key] = true;
        // (w_j, w_{j+1}) -> (w_{j+1} + t w_j, w_j) has determinant -1.
        queue.push_back(Node{std::move(next), -node.phi});
      }
    }
  }
  throw InternalInvariantError("compare_chains: target flag not reachable");
}

std::vector<ChainBasis> maximal_chains(const TorsionModule& Q) {
  const auto elems = Q.elements();
  std::vector<ChainBasis> out;
  std::vector<Vec> w;
  std::function<void(const LatticeCanon&)> grow = [&](const LatticeCanon& G) {
    if (static_cast<int>(w.size()) == Q.length()) {
      out.push_back(ChainBasis{w});
      return;
    }
    std::map<std::vector<std::int64_t>, bool> tried;
    for (const auto& v : elems) {
      if (G.contains_vector(v) || !G.contains_vector(times_p(v))) continue;
      w.push_back(v);
      auto next = Q.span(w);
      if (!tried.count(next.key())) {
        tried[next.key()] = true;
        check_work(out.size() + tried.size(), "maximal chain enumeration");
        grow(next);
      }
      w.pop_back();
    }
  };
  grow(Q.zero());
  return out;
}

}  // namespace wittgrass

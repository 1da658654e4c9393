#pragma once

/**
 * @file centralext.hpp
 * @brief Tame symbol on K = W(F_q)[1/p] and the determinant 2-cocycle of the
 * loop group of SL_n at a point.
 *
 * An element g of GL_n(K) is stored as p^{-shift} G with G over O/p^N. For a
 * level a <= v(g) the coset module is p^a O^n / g O^n; in row coordinates it
 * is O^n / rowspan(p^{-a} g^T). The section g -> (g, reference basis of its
 * coset determinant) yields the cocycle
 *   c(g, h) = [chain: g(reference of Q_h), then reference of Q_g] in Q_gh,
 * read against the reference of Q_gh at level a + b.
 */

#include <optional>
#include <string>
#include <string_view>

#include "wittgrass/detline.hpp"
#include "wittgrass/matrix_io.hpp"

namespace wittgrass {

// Nonzero element p^v u of K, u a unit of O/p^N.
class KElement {
 public:
  KElement(int valuation, RingElem unit);
  // Throws InputError for zero.
  static KElement from_entry(const DigitEntry& e, const CtxPtr& ctx);
  static KElement parse(std::string_view text, const CtxPtr& ctx);
  static KElement teichmuller_unit(const RingElem& residue, const CtxPtr& ctx, int valuation = 0);

  int valuation() const { return v_; }
  const RingElem& unit() const { return u_; }
  RingElem residue() const { return u_.residue(); }
  const CtxPtr& ctx() const { return u_.ctx(); }

  KElement operator*(const KElement& rhs) const;
  KElement inverse() const;
  // 1 - x; throws PrecisionError if the result vanishes at precision.
  KElement one_minus() const;
  std::string to_string() const;

 private:
  int v_;
  RingElem u_;
};

// (-1)^{v(a)v(b)} ā^{v(b)} b̄^{-v(a)} in F_q^×.
RingElem tame_symbol(const KElement& a, const KElement& b);

class LoopGroupElt {
 public:
  // p^{-shift} G; G must be invertible over K at precision.
  LoopGroupElt(Matrix G, int shift = 0);
  static LoopGroupElt identity(const CtxPtr& ctx, int n);
  static LoopGroupElt diagonal(const std::vector<KElement>& entries);
  static LoopGroupElt from_file(const MatrixFile& file, const CtxPtr& ctx);

  const Matrix& mantissa() const { return G_; }
  int shift() const { return shift_; }
  int n() const { return G_.rows(); }
  const CtxPtr& ctx() const { return G_.ctx(); }

  // Smallest valuation of an entry of g.
  int valuation() const;
  // v_p(det g).
  int det_valuation() const;
  // det g = 1 at precision.
  bool is_special() const;

  LoopGroupElt operator*(const LoopGroupElt& rhs) const;
  LoopGroupElt inverse() const;
  bool commutes_with(const LoopGroupElt& other) const;
  friend bool operator==(const LoopGroupElt& a, const LoopGroupElt& b);

 private:
  Matrix G_;
  int shift_ = 0;
};

// Largest N with p^N <= 2^62.
int default_loop_precision(std::int64_t p);

// p^e M; for e < 0 the entries are divided and the precision drops by -e.
Matrix scale_by_p(const Matrix& M, int e);

// O^n / rowspan(p^{-a} g^T); InputError if a > v(g).
TorsionModule coset_module(const LoopGroupElt& g, int a);
// Degree = length of p^a O^n / g O^n, scalar 1 against the reference.
GradedLine coset_det(const LoopGroupElt& g, int a);

// h at level a, g at level b, gh at level a + b. Both must be special.
RingElem cocycle_at(const LoopGroupElt& g, const LoopGroupElt& h, int a, int b);
// Uses the common level a (default: the largest valid one per argument).
RingElem cocycle(const LoopGroupElt& g, const LoopGroupElt& h, std::optional<int> a = std::nullopt);

// c(g, h) / c(h, g) for commuting g, h; InputError if they do not commute.
RingElem commutator_pairing(const LoopGroupElt& g, const LoopGroupElt& h, std::optional<int> a = std::nullopt);

// Measured normalization: the pairing of commuting diagonal elements
// diag(a_i) and diag(b_i) equals Π_i tame_symbol(a_i, b_i)^kPairingExponent.
// On diag(a, a^{-1}) x diag(b, b^{-1}) this is tame_symbol(a, b)^2.
inline constexpr int kPairingExponent = 1;

// Π_i tame_symbol(a_i, b_i)^kPairingExponent.
RingElem torus_symbol(const std::vector<KElement>& a, const std::vector<KElement>& b);

}  // namespace wittgrass

#pragma once

/**
 * @file torsion.hpp
 * @brief A finite torsion module Q = O^n / rowspan(A) in Smith coordinates.
 *
 * With U A V = diag(p^{d_1}, ..., p^{d_n}) (d decreasing), x in O^n maps to
 * y = x V and Q ≅ ⊕ O/p^{d_k}. The reference vector f_k is e_k V^{-1}.
 * Q is embedded into (O/p^c)^n, c = max(d_1, 1), by scaling coordinate k by
 * p^{c - d_k}; submodules of Q are then LatticeCanon values in window [0, c].
 */

#include <vector>

#include "wittgrass/lattice.hpp"

namespace wittgrass {

class TorsionModule {
 public:
  explicit TorsionModule(IsogenyMatrix presentation);
  // Diagonal presentation of the given type with n generators (n >= length).
  static TorsionModule of_type(const FieldParams& field, const Partition& type, int n = -1, int precision = -1);

  const IsogenyMatrix& presentation() const { return pres_; }
  const Partition& type() const { return type_; }
  int length() const { return type_.total(); }
  int rank() const { return pres_.n(); }
  int exponent() const { return c_; }
  // d_k for each Smith coordinate, decreasing, size rank().
  const std::vector<int>& divisors() const { return divisors_; }
  // O/p^c, the ring of embedded coordinates.
  const CtxPtr& ctx() const { return ctx_; }
  Window window() const { return Window{0, c_}; }

  // x in O^n at the presentation's precision.
  std::vector<RingElem> embed(const std::vector<RingElem>& x) const;
  // Embedded p^i f_k.
  std::vector<RingElem> reference_vector(int k, int i = 0) const;
  // Smith coordinate y_k of an embedded vector, as an element of O/p^c
  // determined modulo p^{d_k}.
  RingElem coordinate(const std::vector<RingElem>& v, int k) const;
  // A vector of O^n (presentation precision) with the given image.
  std::vector<RingElem> lift(const std::vector<RingElem>& embedded) const;

  LatticeCanon span(const std::vector<std::vector<RingElem>>& embedded) const;
  LatticeCanon whole() const { return p_power(0); }
  // p^i Q.
  LatticeCanon p_power(int i) const;
  LatticeCanon zero() const;
  // Every element of Q, embedded; guarded by the work bound.
  std::vector<std::vector<RingElem>> elements() const;
  // Length of a submodule of Q.
  int length_of(const LatticeCanon& sub) const;

 private:
  IsogenyMatrix pres_;
  Partition type_;
  int c_ = 1;
  std::vector<int> divisors_;
  CtxPtr ctx_;
  Matrix V_;      // reduced to O/p^c
  Matrix V_inv_;  // presentation precision
};

}  // namespace wittgrass

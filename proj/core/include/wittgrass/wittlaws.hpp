#pragma once

/**
 * @file wittlaws.hpp
 * @brief Universal Witt addition and multiplication laws, and arithmetic in W_m(F_q).
 *
 * The laws S_n, P_n in Z[X_0..X_{m-1}, Y_0..Y_{m-1}] are solved from the ghost
 * components w_n(Z) = sum_{i<=n} p^i Z_i^{p^{n-i}} one index at a time, with
 * exact divisibility by p^n checked at every step.
 *
 * Digit convention: (x_0, x_1, ...) in W_m(F_q) corresponds to
 * sum_i [x_i^{p^{-i}}] p^i in W(F_q)/p^m.
 */

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wittgrass/intpoly.hpp"
#include "wittgrass/ring.hpp"

namespace wittgrass {

inline constexpr int kMaxWittLength = 5;

struct WittPolySet {
  std::int64_t p = 0;
  int m = 0;
  std::vector<IntPoly> sum;      // S_0 .. S_{m-1}
  std::vector<IntPoly> product;  // P_0 .. P_{m-1}

  static int x_var(int i) { return i; }
  int y_var(int i) const { return m + i; }
  std::vector<std::string> variable_names() const;
  // Canonical order used for printing: X_{m-1}, Y_{m-1}, ..., X_0, Y_0.
  std::vector<int> canonical_order() const;
};

// Ghost component w_n over the variables first_var + i (i = 0..n).
IntPoly ghost_polynomial(std::int64_t p, int n, int first_var);

// Solves the laws; throws InternalInvariantError if a division by p^n is inexact.
WittPolySet derive_witt_laws(std::int64_t p, int m);

// Cached per (p, m); thread-safe.
std::shared_ptr<const WittPolySet> witt_laws(std::int64_t p, int m);

// Recomputes w_n(S) - w_n(X) - w_n(Y) and w_n(P) - w_n(X) w_n(Y) for all n < m
// from scratch and returns true iff every difference is the zero polynomial.
bool verify_ghost_identities(const WittPolySet& laws);

struct WittVec {
  FieldParams field;
  std::vector<RingElem> components;  // field elements

  int length() const { return static_cast<int>(components.size()); }
  friend bool operator==(const WittVec& a, const WittVec& b) {
    return a.field == b.field && a.components == b.components;
  }
};

// Arithmetic in W_m(F_q).
class WittRing {
 public:
  enum class Engine {
    // Evaluate the expanded integer laws reduced mod p.
    Expanded,
    // Evaluate the same laws through their recursive ghost definition on an
    // arbitrary lift to GR(p^m, d); used where the expanded laws are too large.
    Ghost,
    Auto,
  };

  WittRing(FieldParams field, int m, Engine engine = Engine::Auto);

  const FieldParams& field() const { return field_; }
  int length() const { return m_; }
  const CtxPtr& field_ctx() const { return fctx_; }
  Engine engine() const { return engine_; }
  // Laws are available only for the Expanded engine.
  const WittPolySet* laws() const { return laws_.get(); }

  WittVec make(std::vector<RingElem> components) const;
  WittVec from_codes(const std::vector<std::int64_t>& codes) const;
  WittVec zero() const;
  WittVec one() const;

  WittVec add(const WittVec& a, const WittVec& b) const;
  WittVec mul(const WittVec& a, const WittVec& b) const;
  WittVec neg(const WittVec& a) const;
  WittVec sub(const WittVec& a, const WittVec& b) const { return add(a, neg(b)); }
  // V(a) = (0, a_0, ..., a_{m-2}).
  WittVec verschiebung(const WittVec& a) const;
  // F(a) = (a_0^p, a_1^p, ...).
  WittVec frobenius(const WittVec& a) const;
  // [x] = (x, 0, ..., 0).
  WittVec teichmuller(const RingElem& x) const;

  // Largest law size for which Auto picks the Expanded engine: p^{m-1} <= this.
  static constexpr std::int64_t kExpandedWeightLimit = 125;

 private:
  void check(const WittVec& a) const;
  std::vector<RingElem> ghost_solve(const WittVec& a, const WittVec& b, bool product) const;

  FieldParams field_;
  int m_;
  Engine engine_;
  CtxPtr fctx_;
  CtxPtr lift_ctx_;
  std::shared_ptr<const WittPolySet> laws_;
  // Laws with coefficients reduced mod p: (monomial, coefficient) lists.
  std::vector<std::vector<std::pair<Monomial, std::int64_t>>> sum_mod_p_;
  std::vector<std::vector<std::pair<Monomial, std::int64_t>>> prod_mod_p_;
};

// sum_i [a_i^{p^{-i}}] p^i in O/p^N; requires N = m.
RingElem witt_to_galois(const WittVec& a, const CtxPtr& ctx);
// Inverse map, via Teichmuller digits.
WittVec galois_to_witt(const RingElem& x);

}  // namespace wittgrass

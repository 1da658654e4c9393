#pragma once

/**
 * @file ring.hpp
 * @brief Exact arithmetic in F_q and in the truncated Witt ring W(F_q)/p^N.
 *
 * W(F_q)/p^N is realized as the Galois ring GR(p^N, d) = (Z/p^N)[x]/(f),
 * where f is the lexicographically first monic irreducible of degree d over
 * F_p, read coefficient-wise in Z/p^N. Field elements are ring elements at
 * precision N = 1.
 *
 * Contexts are immutable and shared; elements are plain values.
 */

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wittgrass/errors.hpp"

namespace wittgrass {

// Residue field degrees above this are rejected; elements store coefficients inline.
inline constexpr int kMaxDegree = 8;

bool is_prime(std::int64_t n);

// q = p^d with p prime, or nullopt.
std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t q);

struct FieldParams {
  std::int64_t p = 0;
  int d = 0;
  // Monic, low degree first, size d + 1, entries in [0, p).
  std::vector<std::int64_t> modulus;

  std::int64_t q() const;
  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

// Deterministic: the first monic irreducible in lexicographic order of the
// coefficient vector (c_0, ..., c_{d-1}) read from the constant term up.
FieldParams make_field(std::int64_t p, int d);

// Exhaustive irreducibility test over F_p (trial division by every monic of
// degree <= deg/2). Small degrees only.
bool is_irreducible_mod_p(std::span<const std::int64_t> monic, std::int64_t p);

class GaloisRingCtx;
using CtxPtr = std::shared_ptr<const GaloisRingCtx>;

class GaloisRingCtx {
 public:
  static CtxPtr make(FieldParams field, int precision);
  static CtxPtr make(std::int64_t p, int d, int precision) { return make(make_field(p, d), precision); }

  const FieldParams& field() const { return field_; }
  std::int64_t p() const { return field_.p; }
  int degree() const { return field_.d; }
  std::int64_t q() const { return field_.q(); }
  int precision() const { return precision_; }
  // p^N.
  std::int64_t modulus() const { return pows_.back(); }
  // p^k for 0 <= k <= N.
  std::int64_t p_pow(int k) const { return pows_.at(static_cast<std::size_t>(k)); }
  std::span<const std::int64_t> lifted_modulus() const { return lifted_; }

  // Same field and precision (compared by value).
  bool same_ring(const GaloisRingCtx& other) const;

  CtxPtr with_precision(int precision) const { return make(field_, precision); }
  CtxPtr residue_field() const { return make(field_, 1); }

 private:
  GaloisRingCtx(FieldParams field, int precision);

  FieldParams field_;
  int precision_;
  std::vector<std::int64_t> pows_;
  std::vector<std::int64_t> lifted_;
};

class RingElem {
 public:
  RingElem() = default;
  explicit RingElem(CtxPtr ctx);
  RingElem(CtxPtr ctx, std::int64_t value);
  RingElem(CtxPtr ctx, std::span<const std::int64_t> coeffs);

  const CtxPtr& ctx() const { return ctx_; }
  std::span<const std::int64_t> coeffs() const;
  std::int64_t coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  bool is_one() const;
  // x mod p != 0.
  bool is_unit() const;
  // Largest k with x in p^k O; precision() for zero.
  int valuation() const;

  RingElem operator+(const RingElem& rhs) const;
  RingElem operator-(const RingElem& rhs) const;
  RingElem operator*(const RingElem& rhs) const;
  RingElem operator-() const;
  RingElem& operator+=(const RingElem& rhs) { return *this = *this + rhs; }
  RingElem& operator-=(const RingElem& rhs) { return *this = *this - rhs; }
  RingElem& operator*=(const RingElem& rhs) { return *this = *this * rhs; }
  RingElem scaled(std::int64_t k) const;

  // Throws NotAUnit for non-units.
  RingElem inv() const;
  RingElem pow(std::uint64_t e) const;
  // x^p: reduces to the field Frobenius mod p.
  RingElem frobenius() const { return pow(static_cast<std::uint64_t>(ctx_->p())); }

  // Multiplication by p^k (k >= 0).
  RingElem times_p_pow(int k) const;
  // Some y with p^k y = x. Requires valuation() >= k; the top k digits of y are zero.
  RingElem div_p_pow(int k) const;
  // Canonical representative of x mod p^k (coefficients reduced into [0, p^k)).
  RingElem mod_p_pow(int k) const;
  // Image in O/p^M for M <= N.
  RingElem reduce_to(const CtxPtr& lower) const;
  // Coefficient-wise lift into O/p^M for M >= N.
  RingElem lift_to(const CtxPtr& higher) const;
  // Image in the residue field F_q.
  RingElem residue() const;

  // Field elements only: sum c_i p^i of the coefficient vector, in [0, q).
  std::int64_t field_code() const;
  static RingElem from_field_code(const CtxPtr& field_ctx, std::int64_t code);

  std::string to_string() const;

  friend bool operator==(const RingElem& a, const RingElem& b);
  friend bool operator<(const RingElem& a, const RingElem& b);

 private:
  void check_same(const RingElem& rhs) const;

  CtxPtr ctx_;
  std::array<std::int64_t, kMaxDegree> coeffs_{};
};

// All q elements of F_q in field_code order.
std::vector<RingElem> field_elements(const CtxPtr& field_ctx);

// Teichmuller representative [a] in O/p^N of a residue a (given at any precision;
// only a mod p is used). Fixed point of y -> y^q.
RingElem teichmuller(const CtxPtr& ctx, const RingElem& a);

// Digits a_0, ..., a_{N-1} in F_q with x = sum [a_i] p^i.
std::vector<RingElem> teich_expand(const RingElem& x);
RingElem teich_reconstruct(const CtxPtr& ctx, std::span<const RingElem> digits);

}  // namespace wittgrass

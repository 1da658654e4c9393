#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace wittgrass {

inline constexpr int kMaxPolyVars = 10;

struct Monomial {
  std::array<std::uint16_t, kMaxPolyVars> exps{};

  int degree_in(int var) const { return exps[static_cast<std::size_t>(var)]; }
  Monomial operator*(const Monomial& other) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class IntPoly {
 public:
  using TermMap = std::unordered_map<Monomial, mpz_class, MonomialHash>;

  IntPoly() = default;
  static IntPoly constant(const mpz_class& c);
  static IntPoly variable(int var);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const mpz_class& c);

  IntPoly operator+(const IntPoly& rhs) const;
  IntPoly operator-(const IntPoly& rhs) const;
  IntPoly operator*(const IntPoly& rhs) const;
  IntPoly scaled(const mpz_class& c) const;
  IntPoly pow(std::uint64_t e) const;

  // Exact division of every coefficient by d; throws InternalInvariantError otherwise.
  IntPoly divided_exactly(const mpz_class& d) const;

  // Terms sorted descending lexicographically on the exponent vector read in
  // `var_order`.
  std::vector<std::pair<Monomial, mpz_class>> sorted_terms(const std::vector<int>& var_order) const;

  std::string to_string(const std::vector<std::string>& names, const std::vector<int>& var_order) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

}  // namespace wittgrass

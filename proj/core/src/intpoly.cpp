#include "wittgrass/intpoly.hpp"

#include <algorithm>
#include <sstream>

#include "wittgrass/errors.hpp"

namespace wittgrass {

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = static_cast<std::uint16_t>(exps[i] + other.exps[i]);
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto e : m.exps) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

IntPoly IntPoly::constant(const mpz_class& c) {
  IntPoly r;
  r.add_term(Monomial{}, c);
  return r;
}

IntPoly IntPoly::variable(int var) {
  Monomial m;
  m.exps[static_cast<std::size_t>(var)] = 1;
  IntPoly r;
  r.add_term(m, 1);
  return r;
}

void IntPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
  IntPoly r = *this;
  for (const auto& [m, c] : rhs.terms_) r.add_term(m, c);
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
  IntPoly r = *this;
  for (const auto& [m, c] : rhs.terms_) r.add_term(m, -c);
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
  IntPoly r;
  r.terms_.reserve(terms_.size() * 2 + rhs.terms_.size() * 2);
  mpz_class tmp;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      tmp = ca * cb;
      r.add_term(ma * mb, tmp);
    }
  }
  return r;
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
  IntPoly r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

IntPoly IntPoly::pow(std::uint64_t e) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

IntPoly IntPoly::divided_exactly(const mpz_class& d) const {
  IntPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
      throw InternalInvariantError("IntPoly: coefficient " + c.get_str() + " not divisible by " + d.get_str());
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    r.terms_.emplace(m, q);
  }
  return r;
}

std::vector<std::pair<Monomial, mpz_class>> IntPoly::sorted_terms(const std::vector<int>& var_order) const {
  std::vector<std::pair<Monomial, mpz_class>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    for (int v : var_order) {
      const auto ea = a.first.degree_in(v);
      const auto eb = b.first.degree_in(v);
      if (ea != eb) return ea > eb;
    }
    return false;
  });
  return out;
}

std::string IntPoly::to_string(const std::vector<std::string>& names, const std::vector<int>& var_order) const {
  const auto terms = sorted_terms(var_order);
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    const mpz_class mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (mag != 1) factors.push_back(mag.get_str());
    // Factors are printed in increasing variable index.
    for (std::size_t v = 0; v < names.size(); ++v) {
      const int e = m.degree_in(static_cast<int>(v));
      if (e == 0) continue;
      factors.push_back(e == 1 ? names[v] : names[v] + "^" + std::to_string(e));
    }
    if (factors.empty()) factors.push_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

}  // namespace wittgrass

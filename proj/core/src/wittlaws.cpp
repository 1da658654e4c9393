#include "wittgrass/wittlaws.hpp"

#include <map>
#include <mutex>

namespace wittgrass {

namespace {

mpz_class mpz_pow(std::int64_t base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

std::uint64_t ipow(std::int64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<std::uint64_t>(base);
  return r;
}

void check_shape(std::int64_t p, int m) {
  if (!is_prime(p)) throw InputError("witt laws: p must be prime");
  if (m < 1 || m > kMaxWittLength) {
    throw InputError("witt laws: length m must be in [1, " + std::to_string(kMaxWittLength) + "]");
  }
  // Exponents are stored in 16 bits.
  if (ipow(p, m - 1) > 60000) throw InputError("witt laws: p^(m-1) too large for exact expansion");
}

}  // namespace

std::vector<std::string> WittPolySet::variable_names() const {
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.push_back("X_" + std::to_string(i));
  for (int i = 0; i < m; ++i) names.push_back("Y_" + std::to_string(i));
  return names;
}

std::vector<int> WittPolySet::canonical_order() const {
  std::vector<int> order;
  for (int i = m - 1; i >= 0; --i) {
    order.push_back(x_var(i));
    order.push_back(y_var(i));
  }
  return order;
}

IntPoly ghost_polynomial(std::int64_t p, int n, int first_var) {
  IntPoly w;
  for (int i = 0; i <= n; ++i) {
    Monomial mono;
    mono.exps[static_cast<std::size_t>(first_var + i)] = static_cast<std::uint16_t>(ipow(p, n - i));
    w.add_term(mono, mpz_pow(p, static_cast<unsigned long>(i)));
  }
  return w;
}

WittPolySet derive_witt_laws(std::int64_t p, int m) {
  check_shape(p, m);
  WittPolySet laws;
  laws.p = p;
  laws.m = m;
  // powers[i][k] = law_i^{p^k}
  std::vector<std::vector<IntPoly>> sum_pows(static_cast<std::size_t>(m));
  std::vector<std::vector<IntPoly>> prod_pows(static_cast<std::size_t>(m));
  for (int n = 0; n < m; ++n) {
    const IntPoly wx = ghost_polynomial(p, n, laws.x_var(0));
    const IntPoly wy = ghost_polynomial(p, n, laws.y_var(0));
    IntPoly sum_num = wx + wy;
    IntPoly prod_num = wx * wy;
    for (int i = 0; i < n; ++i) {
      auto& sp = sum_pows[static_cast<std::size_t>(i)];
      auto& pp = prod_pows[static_cast<std::size_t>(i)];
      const auto k = static_cast<std::size_t>(n - i);
      while (sp.size() <= k) sp.push_back(sp.back().pow(static_cast<std::uint64_t>(p)));
      while (pp.size() <= k) pp.push_back(pp.back().pow(static_cast<std::uint64_t>(p)));
      const mpz_class pi = mpz_pow(p, static_cast<unsigned long>(i));
      sum_num = sum_num - sp[k].scaled(pi);
      prod_num = prod_num - pp[k].scaled(pi);
    }
    const mpz_class pn = mpz_pow(p, static_cast<unsigned long>(n));
    laws.sum.push_back(sum_num.divided_exactly(pn));
    laws.product.push_back(prod_num.divided_exactly(pn));
    sum_pows[static_cast<std::size_t>(n)].push_back(laws.sum.back());
    prod_pows[static_cast<std::size_t>(n)].push_back(laws.product.back());
  }
  return laws;
}

std::shared_ptr<const WittPolySet> witt_laws(std::int64_t p, int m) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, int>, std::shared_ptr<const WittPolySet>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, m});
    if (it != cache.end()) return it->second;
  }
  auto laws = std::make_shared<const WittPolySet>(derive_witt_laws(p, m));
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace({p, m}, std::move(laws)).first->second;
}

bool verify_ghost_identities(const WittPolySet& laws) {
  const auto p = laws.p;
  for (int n = 0; n < laws.m; ++n) {
    const IntPoly wx = ghost_polynomial(p, n, laws.x_var(0));
    const IntPoly wy = ghost_polynomial(p, n, laws.y_var(0));
    IntPoly ws;
    IntPoly wp;
    for (int i = 0; i <= n; ++i) {
      const mpz_class pi = mpz_pow(p, static_cast<unsigned long>(i));
      const auto e = ipow(p, n - i);
      ws = ws + laws.sum[static_cast<std::size_t>(i)].pow(e).scaled(pi);
      wp = wp + laws.product[static_cast<std::size_t>(i)].pow(e).scaled(pi);
    }
    if (!(ws - wx - wy).is_zero()) return false;
    if (!(wp - wx * wy).is_zero()) return false;
  }
  return true;
}

WittRing::WittRing(FieldParams field, int m, Engine engine)
    : field_(std::move(field)), m_(m), engine_(engine) {
  if (m < 1) throw InputError("WittRing: length must be >= 1");
  fctx_ = GaloisRingCtx::make(field_, 1);
  lift_ctx_ = GaloisRingCtx::make(field_, m);
  if (engine_ == Engine::Auto) {
    const bool small = m <= kMaxWittLength && ipow(field_.p, m - 1) <= static_cast<std::uint64_t>(kExpandedWeightLimit);
    engine_ = small ? Engine::Expanded : Engine::Ghost;
  }
  if (engine_ == Engine::Expanded) {
    laws_ = witt_laws(field_.p, m);
    const mpz_class pz(static_cast<long>(field_.p));
    auto reduce = [&](const std::vector<IntPoly>& polys) {
      std::vector<std::vector<std::pair<Monomial, std::int64_t>>> out;
      for (const auto& poly : polys) {
        std::vector<std::pair<Monomial, std::int64_t>> terms;
        for (const auto& [mono, c] : poly.sorted_terms(laws_->canonical_order())) {
          mpz_class r;
          mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
          if (r != 0) terms.emplace_back(mono, r.get_si());
        }
        out.push_back(std::move(terms));
      }
      return out;
    };
    sum_mod_p_ = reduce(laws_->sum);
    prod_mod_p_ = reduce(laws_->product);
  }
}

void WittRing::check(const WittVec& a) const {
  if (a.field != field_ || a.length() != m_) throw ContextMismatch("WittRing: shape mismatch");
  for (const auto& c : a.components) {
    if (!c.ctx()->same_ring(*fctx_)) throw ContextMismatch("WittRing: component is not in the residue field");
  }
}

WittVec WittRing::make(std::vector<RingElem> components) const {
  if (static_cast<int>(components.size()) != m_) throw ContextMismatch("WittRing::make: wrong length");
  for (auto& c : components) c = c.residue().lift_to(fctx_);
  WittVec v{field_, std::move(components)};
  check(v);
  return v;
}

WittVec WittRing::from_codes(const std::vector<std::int64_t>& codes) const {
  std::vector<RingElem> comps;
  for (auto c : codes) comps.push_back(RingElem::from_field_code(fctx_, c));
  return make(std::move(comps));
}

WittVec WittRing::zero() const { return WittVec{field_, std::vector<RingElem>(static_cast<std::size_t>(m_), RingElem(fctx_))}; }

WittVec WittRing::one() const { return teichmuller(RingElem(fctx_, 1)); }

namespace {

// Evaluates reduced laws at (a, b). powers[v][e] = value_v^e.
std::vector<RingElem> evaluate_reduced(const std::vector<std::vector<std::pair<Monomial, std::int64_t>>>& laws,
                                       const std::vector<RingElem>& values, const CtxPtr& fctx, std::size_t count) {
  std::vector<int> max_exp(values.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    for (const auto& [mono, c] : laws[n]) {
      for (std::size_t v = 0; v < values.size(); ++v) max_exp[v] = std::max(max_exp[v], mono.degree_in(static_cast<int>(v)));
    }
  }
  std::vector<std::vector<RingElem>> powers(values.size());
  for (std::size_t v = 0; v < values.size(); ++v) {
    powers[v].push_back(RingElem(fctx, 1));
    for (int e = 1; e <= max_exp[v]; ++e) powers[v].push_back(powers[v].back() * values[v]);
  }
  std::vector<RingElem> out;
  for (std::size_t n = 0; n < count; ++n) {
    RingElem acc(fctx);
    for (const auto& [mono, c] : laws[n]) {
      RingElem term(fctx, c);
      for (std::size_t v = 0; v < values.size() && !term.is_zero(); ++v) {
        const int e = mono.degree_in(static_cast<int>(v));
        if (e) term *= powers[v][static_cast<std::size_t>(e)];
      }
      acc += term;
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace

std::vector<RingElem> WittRing::ghost_solve(const WittVec& a, const WittVec& b, bool product) const {
  const auto p = field_.p;
  std::vector<RingElem> A;
  std::vector<RingElem> B;
  for (int i = 0; i < m_; ++i) {
    A.push_back(a.components[static_cast<std::size_t>(i)].lift_to(lift_ctx_));
    B.push_back(b.components[static_cast<std::size_t>(i)].lift_to(lift_ctx_));
  }
  auto ghost = [&](const std::vector<RingElem>& z, int n) {
    RingElem w(lift_ctx_);
    for (int i = 0; i <= n; ++i) w += z[static_cast<std::size_t>(i)].pow(ipow(p, n - i)).times_p_pow(i);
    return w;
  };
  std::vector<RingElem> solved;
  for (int n = 0; n < m_; ++n) {
    RingElem num = product ? ghost(A, n) * ghost(B, n) : ghost(A, n) + ghost(B, n);
    for (int i = 0; i < n; ++i) num -= solved[static_cast<std::size_t>(i)].pow(ipow(p, n - i)).times_p_pow(i);
    solved.push_back(num.div_p_pow(n));
  }
  std::vector<RingElem> out;
  for (const auto& s : solved) out.push_back(s.residue().lift_to(fctx_));
  return out;
}

WittVec WittRing::add(const WittVec& a, const WittVec& b) const {
  check(a);
  check(b);
  if (engine_ == Engine::Ghost) return WittVec{field_, ghost_solve(a, b, false)};
  std::vector<RingElem> values = a.components;
  values.insert(values.end(), b.components.begin(), b.components.end());
  return WittVec{field_, evaluate_reduced(sum_mod_p_, values, fctx_, static_cast<std::size_t>(m_))};
}

WittVec WittRing::mul(const WittVec& a, const WittVec& b) const {
  check(a);
  check(b);
  if (engine_ == Engine::Ghost) return WittVec{field_, ghost_solve(a, b, true)};
  std::vector<RingElem> values = a.components;
  values.insert(values.end(), b.components.begin(), b.components.end());
  return WittVec{field_, evaluate_reduced(prod_mod_p_, values, fctx_, static_cast<std::size_t>(m_))};
}

WittVec WittRing::neg(const WittVec& a) const {
  check(a);
  // Solve S_n(a, b) = 0 for b_n, index by index. S_n = X_n + Y_n + (terms in lower indices).
  WittVec b = zero();
  for (int n = 0; n < m_; ++n) {
    const WittVec s = add(a, b);
    b.components[static_cast<std::size_t>(n)] = -s.components[static_cast<std::size_t>(n)];
  }
  return b;
}

WittVec WittRing::verschiebung(const WittVec& a) const {
  check(a);
  WittVec r = zero();
  for (int i = 1; i < m_; ++i) r.components[static_cast<std::size_t>(i)] = a.components[static_cast<std::size_t>(i - 1)];
  return r;
}

WittVec WittRing::frobenius(const WittVec& a) const {
  check(a);
  WittVec r = a;
  for (auto& c : r.components) c = c.frobenius();
  return r;
}

WittVec WittRing::teichmuller(const RingElem& x) const {
  WittVec r = zero();
  r.components[0] = x.residue().lift_to(fctx_);
  return r;
}

RingElem witt_to_galois(const WittVec& a, const CtxPtr& ctx) {
  if (ctx->field() != a.field || ctx->precision() != a.length()) {
    throw ContextMismatch("witt_to_galois: ring precision must equal the Witt length");
  }
  const int d = a.field.d;
  RingElem acc(ctx);
  for (int i = 0; i < a.length(); ++i) {
    // x^{p^{-i}} = x^{p^{(-i) mod d}} on F_q.
    const int k = ((-i) % d + d) % d;
    RingElem digit = a.components[static_cast<std::size_t>(i)];
    for (int j = 0; j < k; ++j) digit = digit.frobenius();
    acc += wittgrass::teichmuller(ctx, digit).times_p_pow(i);
  }
  return acc;
}

WittVec galois_to_witt(const RingElem& x) {
  const auto digits = teich_expand(x);
  std::vector<RingElem> comps;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    // Inverse twist: component_i = digit_i^{p^i}.
    RingElem c = digits[i];
    for (std::size_t j = 0; j < i % static_cast<std::size_t>(x.ctx()->degree()); ++j) c = c.frobenius();
    comps.push_back(c);
  }
  return WittVec{x.ctx()->field(), std::move(comps)};
}

}  // namespace wittgrass

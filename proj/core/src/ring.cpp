#include "wittgrass/ring.hpp"

#include <algorithm>
#include <sstream>

namespace wittgrass {

namespace {

using i128 = __int128;

std::int64_t mod_reduce(i128 v, std::int64_t m) {
  auto r = static_cast<std::int64_t>(v % m);
  return r < 0 ? r + m : r;
}

// Polynomial remainder over F_p; both monic-free inputs, returns remainder.
std::vector<std::int64_t> poly_rem_mod_p(std::vector<std::int64_t> a, std::span<const std::int64_t> b,
                                         std::int64_t p) {
  // b is monic.
  const auto db = static_cast<std::ptrdiff_t>(b.size()) - 1;
  for (auto k = static_cast<std::ptrdiff_t>(a.size()) - 1; k >= db; --k) {
    const std::int64_t c = a[static_cast<std::size_t>(k)] % p;
    if (c == 0) continue;
    for (std::ptrdiff_t i = 0; i <= db; ++i) {
      auto& slot = a[static_cast<std::size_t>(k - db + i)];
      slot = mod_reduce(static_cast<i128>(slot) - static_cast<i128>(c) * b[static_cast<std::size_t>(i)], p);
    }
  }
  a.resize(static_cast<std::size_t>(std::max<std::ptrdiff_t>(db, 0)));
  return a;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = 0;
  for (std::int64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return std::make_pair(q, 1);
  int d = 0;
  while (q % p == 0) {
    q /= p;
    ++d;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, d);
}

std::int64_t FieldParams::q() const {
  std::int64_t r = 1;
  for (int i = 0; i < d; ++i) r *= p;
  return r;
}

bool is_irreducible_mod_p(std::span<const std::int64_t> monic, std::int64_t p) {
  const int deg = static_cast<int>(monic.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int k = 1; 2 * k <= deg; ++k) {
    // All monic divisors of degree k, coefficients enumerated as base-p counters.
    std::vector<std::int64_t> div(static_cast<std::size_t>(k) + 1, 0);
    div[static_cast<std::size_t>(k)] = 1;
    while (true) {
      auto rem = poly_rem_mod_p(std::vector<std::int64_t>(monic.begin(), monic.end()), div, p);
      if (std::all_of(rem.begin(), rem.end(), [](std::int64_t c) { return c == 0; })) return false;
      int pos = 0;
      while (pos < k && ++div[static_cast<std::size_t>(pos)] == p) {
        div[static_cast<std::size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == k) break;
    }
  }
  return true;
}

FieldParams make_field(std::int64_t p, int d) {
  if (!is_prime(p)) throw InputError("make_field: " + std::to_string(p) + " is not prime");
  if (d < 1) throw InputError("make_field: degree must be >= 1");
  if (d > kMaxDegree) throw InputError("make_field: degree above supported maximum " + std::to_string(kMaxDegree));
  std::int64_t q = 1;
  for (int i = 0; i < d; ++i) {
    if (q > (std::int64_t{1} << 40) / p) throw InputError("make_field: field too large");
    q *= p;
  }
  std::vector<std::int64_t> poly(static_cast<std::size_t>(d) + 1, 0);
  poly[static_cast<std::size_t>(d)] = 1;
  // Lexicographic on (c_0, ..., c_{d-1}): c_{d-1} varies fastest.
  while (true) {
    if (is_irreducible_mod_p(poly, p)) return FieldParams{p, d, poly};
    int pos = d - 1;
    while (pos >= 0 && ++poly[static_cast<std::size_t>(pos)] == p) {
      poly[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  throw InternalInvariantError("make_field: no irreducible polynomial found");
}

GaloisRingCtx::GaloisRingCtx(FieldParams field, int precision) : field_(std::move(field)), precision_(precision) {
  pows_.push_back(1);
  for (int k = 1; k <= precision_; ++k) {
    const i128 next = static_cast<i128>(pows_.back()) * field_.p;
    if (next > (static_cast<i128>(1) << 62)) throw InputError("GaloisRingCtx: p^N exceeds 2^62");
    pows_.push_back(static_cast<std::int64_t>(next));
  }
  lifted_ = field_.modulus;
}

CtxPtr GaloisRingCtx::make(FieldParams field, int precision) {
  if (precision < 1) throw InputError("GaloisRingCtx: precision must be >= 1");
  if (field.d < 1 || field.d > kMaxDegree || static_cast<int>(field.modulus.size()) != field.d + 1) {
    throw InputError("GaloisRingCtx: malformed field parameters");
  }
  return CtxPtr(new GaloisRingCtx(std::move(field), precision));
}

bool GaloisRingCtx::same_ring(const GaloisRingCtx& other) const {
  return this == &other || (precision_ == other.precision_ && field_ == other.field_);
}

RingElem::RingElem(CtxPtr ctx) : ctx_(std::move(ctx)) {}

RingElem::RingElem(CtxPtr ctx, std::int64_t value) : ctx_(std::move(ctx)) {
  coeffs_[0] = mod_reduce(value, ctx_->modulus());
}

RingElem::RingElem(CtxPtr ctx, std::span<const std::int64_t> coeffs) : ctx_(std::move(ctx)) {
  if (static_cast<int>(coeffs.size()) != ctx_->degree()) {
    throw ContextMismatch("RingElem: expected " + std::to_string(ctx_->degree()) + " coefficients");
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = mod_reduce(coeffs[i], ctx_->modulus());
}

std::span<const std::int64_t> RingElem::coeffs() const {
  return {coeffs_.data(), static_cast<std::size_t>(ctx_->degree())};
}

void RingElem::check_same(const RingElem& rhs) const {
  if (!ctx_ || !rhs.ctx_ || !ctx_->same_ring(*rhs.ctx_)) throw ContextMismatch("RingElem: context mismatch");
}

bool RingElem::is_zero() const {
  for (int i = 0; i < ctx_->degree(); ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

bool RingElem::is_one() const {
  if (coeffs_[0] != 1 % ctx_->modulus()) return false;
  for (int i = 1; i < ctx_->degree(); ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

bool RingElem::is_unit() const {
  const auto p = ctx_->p();
  for (int i = 0; i < ctx_->degree(); ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] % p != 0) return true;
  }
  return false;
}

int RingElem::valuation() const {
  const int n = ctx_->precision();
  int v = n;
  for (int i = 0; i < ctx_->degree(); ++i) {
    std::int64_t c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    int k = 0;
    while (c % ctx_->p() == 0) {
      c /= ctx_->p();
      ++k;
    }
    v = std::min(v, k);
  }
  return v;
}

RingElem RingElem::operator+(const RingElem& rhs) const {
  check_same(rhs);
  RingElem r(ctx_);
  const auto m = ctx_->modulus();
  for (int i = 0; i < ctx_->degree(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    std::int64_t s = coeffs_[k] + rhs.coeffs_[k];
    if (s >= m) s -= m;
    r.coeffs_[k] = s;
  }
  return r;
}

RingElem RingElem::operator-(const RingElem& rhs) const {
  check_same(rhs);
  RingElem r(ctx_);
  const auto m = ctx_->modulus();
  for (int i = 0; i < ctx_->degree(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    std::int64_t s = coeffs_[k] - rhs.coeffs_[k];
    if (s < 0) s += m;
    r.coeffs_[k] = s;
  }
  return r;
}

RingElem RingElem::operator-() const {
  RingElem r(ctx_);
  const auto m = ctx_->modulus();
  for (int i = 0; i < ctx_->degree(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    r.coeffs_[k] = coeffs_[k] == 0 ? 0 : m - coeffs_[k];
  }
  return r;
}

RingElem RingElem::operator*(const RingElem& rhs) const {
  check_same(rhs);
  const int d = ctx_->degree();
  const auto m = ctx_->modulus();
  RingElem r(ctx_);
  if (d == 1) {
    r.coeffs_[0] = mod_reduce(static_cast<i128>(coeffs_[0]) * rhs.coeffs_[0], m);
    return r;
  }
  std::array<i128, 2 * kMaxDegree> prod{};
  for (int i = 0; i < d; ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < d; ++j) {
      auto& slot = prod[static_cast<std::size_t>(i + j)];
      slot = (slot + static_cast<i128>(coeffs_[static_cast<std::size_t>(i)]) * rhs.coeffs_[static_cast<std::size_t>(j)]) % m;
    }
  }
  const auto f = ctx_->lifted_modulus();
  for (int k = 2 * d - 2; k >= d; --k) {
    const i128 c = prod[static_cast<std::size_t>(k)] % m;
    if (c == 0) continue;
    for (int i = 0; i < d; ++i) {
      auto& slot = prod[static_cast<std::size_t>(k - d + i)];
      slot = (slot - c * f[static_cast<std::size_t>(i)]) % m;
    }
  }
  for (int i = 0; i < d; ++i) r.coeffs_[static_cast<std::size_t>(i)] = mod_reduce(prod[static_cast<std::size_t>(i)], m);
  return r;
}

RingElem RingElem::scaled(std::int64_t k) const {
  RingElem r(ctx_);
  const auto m = ctx_->modulus();
  const auto kk = mod_reduce(k, m);
  for (int i = 0; i < ctx_->degree(); ++i) {
    r.coeffs_[static_cast<std::size_t>(i)] = mod_reduce(static_cast<i128>(coeffs_[static_cast<std::size_t>(i)]) * kk, m);
  }
  return r;
}

RingElem RingElem::pow(std::uint64_t e) const {
  RingElem result(ctx_, 1);
  RingElem base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

RingElem RingElem::inv() const {
  if (!is_unit()) throw NotAUnit("RingElem::inv: element is not a unit");
  // Field inverse by Fermat, then Newton lifting y <- y (2 - x y).
  const RingElem r = residue();
  const RingElem r_inv = r.pow(static_cast<std::uint64_t>(ctx_->q() - 2));
  RingElem y = r_inv.lift_to(ctx_);
  const RingElem two(ctx_, 2);
  for (int prec = 1; prec < ctx_->precision(); prec *= 2) y = y * (two - *this * y);
  if (!(*this * y).is_one()) throw InternalInvariantError("RingElem::inv: Newton iteration failed");
  return y;
}

RingElem RingElem::times_p_pow(int k) const {
  if (k >= ctx_->precision()) return RingElem(ctx_);
  return scaled(ctx_->p_pow(k));
}

RingElem RingElem::div_p_pow(int k) const {
  if (k == 0) return *this;
  if (valuation() < k) throw InternalInvariantError("RingElem::div_p_pow: not divisible");
  RingElem r(ctx_);
  const auto pk = ctx_->p_pow(std::min(k, ctx_->precision()));
  for (int i = 0; i < ctx_->degree(); ++i) r.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)] / pk;
  return r;
}

RingElem RingElem::mod_p_pow(int k) const {
  if (k >= ctx_->precision()) return *this;
  RingElem r(ctx_);
  const auto pk = ctx_->p_pow(k);
  for (int i = 0; i < ctx_->degree(); ++i) r.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)] % pk;
  return r;
}

RingElem RingElem::reduce_to(const CtxPtr& lower) const {
  if (lower->field() != ctx_->field() || lower->precision() > ctx_->precision()) {
    throw ContextMismatch("RingElem::reduce_to: target is not a quotient");
  }
  RingElem r(lower);
  for (int i = 0; i < ctx_->degree(); ++i) {
    r.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)] % lower->modulus();
  }
  return r;
}

RingElem RingElem::lift_to(const CtxPtr& higher) const {
  if (higher->field() != ctx_->field()) throw ContextMismatch("RingElem::lift_to: different residue field");
  if (higher->precision() <= ctx_->precision()) return reduce_to(higher);
  RingElem r(higher);
  r.coeffs_ = coeffs_;
  return r;
}

RingElem RingElem::residue() const { return reduce_to(ctx_->residue_field()); }

std::int64_t RingElem::field_code() const {
  if (ctx_->precision() != 1) throw ContextMismatch("field_code: not a field element");
  std::int64_t code = 0;
  for (int i = ctx_->degree() - 1; i >= 0; --i) code = code * ctx_->p() + coeffs_[static_cast<std::size_t>(i)];
  return code;
}

RingElem RingElem::from_field_code(const CtxPtr& field_ctx, std::int64_t code) {
  if (field_ctx->precision() != 1) throw ContextMismatch("from_field_code: not a field context");
  if (code < 0 || code >= field_ctx->q()) throw InputError("field element code " + std::to_string(code) + " out of range");
  RingElem r(field_ctx);
  for (int i = 0; i < field_ctx->degree(); ++i) {
    r.coeffs_[static_cast<std::size_t>(i)] = code % field_ctx->p();
    code /= field_ctx->p();
  }
  return r;
}

std::string RingElem::to_string() const {
  std::ostringstream os;
  if (ctx_->degree() == 1) {
    os << coeffs_[0];
    return os.str();
  }
  os << '(';
  for (int i = 0; i < ctx_->degree(); ++i) os << (i ? "," : "") << coeffs_[static_cast<std::size_t>(i)];
  os << ')';
  return os.str();
}

bool operator==(const RingElem& a, const RingElem& b) {
  a.check_same(b);
  return a.coeffs_ == b.coeffs_;
}

bool operator<(const RingElem& a, const RingElem& b) {
  a.check_same(b);
  return a.coeffs_ < b.coeffs_;
}

std::vector<RingElem> field_elements(const CtxPtr& field_ctx) {
  std::vector<RingElem> out;
  out.reserve(static_cast<std::size_t>(field_ctx->q()));
  for (std::int64_t c = 0; c < field_ctx->q(); ++c) out.push_back(RingElem::from_field_code(field_ctx, c));
  return out;
}

RingElem teichmuller(const CtxPtr& ctx, const RingElem& a) {
  RingElem y = a.residue().lift_to(ctx);
  const auto q = static_cast<std::uint64_t>(ctx->q());
  // Each application of y -> y^q gains one digit of agreement with [a].
  for (int it = 0; it <= ctx->precision(); ++it) {
    RingElem next = y.pow(q);
    if (next == y) return y;
    y = next;
  }
  throw InternalInvariantError("teichmuller: iteration did not stabilise");
}

std::vector<RingElem> teich_expand(const RingElem& x) {
  const auto& ctx = x.ctx();
  std::vector<RingElem> digits;
  digits.reserve(static_cast<std::size_t>(ctx->precision()));
  RingElem rest = x;
  for (int i = 0; i < ctx->precision(); ++i) {
    RingElem a = rest.residue();
    digits.push_back(a);
    // rest <- (rest - [a]) / p; only its value mod p^{N-i-1} matters.
    rest = (rest - teichmuller(ctx, a)).div_p_pow(1);
  }
  return digits;
}

RingElem teich_reconstruct(const CtxPtr& ctx, std::span<const RingElem> digits) {
  RingElem acc(ctx);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    acc += teichmuller(ctx, digits[i]).times_p_pow(static_cast<int>(i));
  }
  return acc;
}

}  // namespace wittgrass

#include "wittgrass/torsion.hpp"

#include "wittgrass/workbound.hpp"

namespace wittgrass {

TorsionModule::TorsionModule(IsogenyMatrix presentation) : pres_(std::move(presentation)) {
  type_ = pres_.cokernel_type();
  divisors_ = pres_.smith().exponents;
  c_ = std::max(type_.largest(), 1);
  ctx_ = pres_.ctx()->with_precision(c_);
  V_ = pres_.smith().V.reduce_to(ctx_);
  V_inv_ = inverse(pres_.smith().V);
}

TorsionModule TorsionModule::of_type(const FieldParams& field, const Partition& type, int n, int precision) {
  if (n < 0) n = std::max(type.length(), 1);
  if (n < type.length()) throw InputError("TorsionModule::of_type: too few generators");
  if (precision < 0) precision = type.total() + 1;
  auto ctx = GaloisRingCtx::make(field, precision);
  Matrix A(ctx, n, n);
  for (int k = 0; k < n; ++k) A.at(k, k) = RingElem(ctx, 1).times_p_pow(type.part(k + 1));
  return TorsionModule(IsogenyMatrix(std::move(A)));
}

std::vector<RingElem> TorsionModule::embed(const std::vector<RingElem>& x) const {
  std::vector<RingElem> xr;
  xr.reserve(x.size());
  for (const auto& e : x) xr.push_back(e.reduce_to(ctx_));
  auto y = vec_mul(xr, V_);
  for (int k = 0; k < rank(); ++k) {
    auto& yk = y[static_cast<std::size_t>(k)];
    yk = yk.mod_p_pow(divisors_[static_cast<std::size_t>(k)]).times_p_pow(c_ - divisors_[static_cast<std::size_t>(k)]);
  }
  return y;
}

std::vector<RingElem> TorsionModule::reference_vector(int k, int i) const {
  auto v = zero_vector(ctx_, rank());
  v[static_cast<std::size_t>(k)] = RingElem(ctx_, 1).times_p_pow(c_ - divisors_[static_cast<std::size_t>(k)] + i);
  return v;
}

RingElem TorsionModule::coordinate(const std::vector<RingElem>& v, int k) const {
  const int shift = c_ - divisors_[static_cast<std::size_t>(k)];
  const auto& x = v[static_cast<std::size_t>(k)];
  if (x.valuation() < shift) throw InternalInvariantError("TorsionModule::coordinate: vector is not in Q");
  return x.div_p_pow(shift).mod_p_pow(divisors_[static_cast<std::size_t>(k)]);
}

std::vector<RingElem> TorsionModule::lift(const std::vector<RingElem>& embedded) const {
  auto y = zero_vector(pres_.ctx(), rank());
  for (int k = 0; k < rank(); ++k) y[static_cast<std::size_t>(k)] = coordinate(embedded, k).lift_to(pres_.ctx());
  return vec_mul(y, V_inv_);
}

LatticeCanon TorsionModule::span(const std::vector<std::vector<RingElem>>& embedded) const {
  return LatticeCanon::canonicalize(Matrix::from_rows(ctx_, embedded, rank()), window());
}

LatticeCanon TorsionModule::p_power(int i) const {
  std::vector<std::vector<RingElem>> gens;
  for (int k = 0; k < rank(); ++k) gens.push_back(reference_vector(k, i));
  return span(gens);
}

LatticeCanon TorsionModule::zero() const { return LatticeCanon::zero(ctx_, rank(), window()); }

std::vector<std::vector<RingElem>> TorsionModule::elements() const {
  check_work(sat_pow(static_cast<std::uint64_t>(ctx_->q()), length()), "torsion module elements");
  const int deg = ctx_->degree();
  std::vector<std::vector<RingElem>> out{zero_vector(ctx_, rank())};
  for (int k = 0; k < rank(); ++k) {
    const int dk = divisors_[static_cast<std::size_t>(k)];
    if (dk == 0) continue;
    // coefficient vectors with entries in [0, p^{d_k})
    std::vector<RingElem> values;
    std::vector<std::int64_t> c(static_cast<std::size_t>(deg), 0);
    const std::int64_t bound = ctx_->p_pow(dk);
    while (true) {
      values.push_back(RingElem(ctx_, c).times_p_pow(c_ - dk));
      int pos = 0;
      while (pos < deg && ++c[static_cast<std::size_t>(pos)] == bound) c[static_cast<std::size_t>(pos++)] = 0;
      if (pos == deg) break;
    }
    std::vector<std::vector<RingElem>> next;
    next.reserve(out.size() * values.size());
    for (const auto& v : out)
      for (const auto& x : values) {
        auto w = v;
        w[static_cast<std::size_t>(k)] = x;
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

int TorsionModule::length_of(const LatticeCanon& sub) const { return sub.submodule_type().total(); }

}  // namespace wittgrass

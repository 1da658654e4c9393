#include "wittgrass/centralext.hpp"

#include "wittgrass/errors.hpp"

namespace wittgrass {

namespace {

RingElem signed_pow(const RingElem& x, long e) {
  if (e >= 0) return x.pow(static_cast<std::uint64_t>(e));
  return x.inv().pow(static_cast<std::uint64_t>(-e));
}

Matrix adjugate(const Matrix& G) {
  const int n = G.rows();
  Matrix adj(G.ctx(), n, n);
  if (n == 1) {
    adj.at(0, 0) = RingElem(G.ctx(), 1);
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix minor(G.ctx(), n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(rr, cc++) = G.at(r, c);
        }
        ++rr;
      }
      const auto d = determinant(minor);
      adj.at(i, j) = (i + j) % 2 == 0 ? d : -d;
    }
  return adj;
}

// Brings two matrices to the smaller of their precisions.
std::pair<Matrix, Matrix> common(const Matrix& a, const Matrix& b) {
  if (a.ctx()->precision() == b.ctx()->precision()) return {a, b};
  if (a.ctx()->precision() < b.ctx()->precision()) return {a, b.reduce_to(a.ctx())};
  return {a.reduce_to(b.ctx()), b};
}

}  // namespace

KElement::KElement(int valuation, RingElem unit) : v_(valuation), u_(std::move(unit)) {
  if (!u_.is_unit()) throw InputError("KElement: unit part is not a unit");
}

KElement KElement::from_entry(const DigitEntry& e, const CtxPtr& ctx) {
  if (e.is_zero()) throw InputError("tame symbol arguments must be nonzero");
  std::size_t first = 0;
  while (e.digits[first] == 0) ++first;
  DigitEntry unit{e.negative, 0, std::vector<std::int64_t>(e.digits.begin() + static_cast<std::ptrdiff_t>(first), e.digits.end())};
  return KElement(e.shift + static_cast<int>(first), entry_value(unit, ctx));
}

KElement KElement::parse(std::string_view text, const CtxPtr& ctx) { return from_entry(parse_entry(text), ctx); }

KElement KElement::teichmuller_unit(const RingElem& residue, const CtxPtr& ctx, int valuation) {
  return KElement(valuation, teichmuller(ctx, residue));
}

KElement KElement::operator*(const KElement& rhs) const { return KElement(v_ + rhs.v_, u_ * rhs.u_); }

KElement KElement::inverse() const { return KElement(-v_, u_.inv()); }

KElement KElement::one_minus() const {
  const RingElem one(ctx(), 1);
  if (v_ > 0) return KElement(0, one - u_.times_p_pow(v_));
  if (v_ < 0) return KElement(v_, one.times_p_pow(-v_) - u_);
  const RingElem z = one - u_;
  if (z.is_zero()) throw PrecisionError("1 - x vanishes at the working precision");
  const int w = z.valuation();
  // the top w digits of the unit are not determined; only its residue is used
  return KElement(w, z.div_p_pow(w));
}

std::string KElement::to_string() const {
  std::string s = "p^" + std::to_string(v_) + "*(" + format_entry(u_) + ")";
  return s;
}

RingElem tame_symbol(const KElement& a, const KElement& b) {
  if (!a.ctx()->same_ring(*b.ctx())) throw ContextMismatch("tame_symbol: different rings");
  const long va = a.valuation(), vb = b.valuation();
  const auto field = a.ctx()->residue_field();
  RingElem r(field, (va * vb) % 2 == 0 ? 1 : -1);
  return r * signed_pow(a.residue(), vb) * signed_pow(b.residue(), -va);
}

RingElem torus_symbol(const std::vector<KElement>& a, const std::vector<KElement>& b) {
  if (a.size() != b.size() || a.empty()) throw InputError("torus_symbol: need two diagonals of the same size");
  RingElem r(a.front().ctx()->residue_field(), 1);
  for (std::size_t i = 0; i < a.size(); ++i) r = r * signed_pow(tame_symbol(a[i], b[i]), kPairingExponent);
  return r;
}

LoopGroupElt::LoopGroupElt(Matrix G, int shift) : G_(std::move(G)), shift_(shift) {
  if (G_.rows() != G_.cols() || G_.rows() == 0) throw InputError("loop group element must be a nonempty square matrix");
  if (determinant(G_).is_zero()) throw PrecisionError("loop group element is not invertible at the working precision");
}

LoopGroupElt LoopGroupElt::identity(const CtxPtr& ctx, int n) { return LoopGroupElt(Matrix::identity(ctx, n)); }

LoopGroupElt LoopGroupElt::diagonal(const std::vector<KElement>& entries) {
  if (entries.empty()) throw InputError("diagonal: no entries");
  int s = 0;
  for (const auto& e : entries) s = std::max(s, -e.valuation());
  Matrix G(entries.front().ctx(), static_cast<int>(entries.size()), static_cast<int>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i)
    G.at(static_cast<int>(i), static_cast<int>(i)) = entries[i].unit().times_p_pow(entries[i].valuation() + s);
  return LoopGroupElt(std::move(G), s);
}

LoopGroupElt LoopGroupElt::from_file(const MatrixFile& file, const CtxPtr& ctx) {
  const int s = std::max(0, -file.min_exponent());
  return LoopGroupElt(to_matrix(file, ctx, s), s);
}

int LoopGroupElt::valuation() const { return G_.valuation() - shift_; }

int LoopGroupElt::det_valuation() const { return determinant(G_).valuation() - n() * shift_; }

bool LoopGroupElt::is_special() const {
  const int e = n() * shift_;
  if (e < 0) return false;
  if (e >= ctx()->precision()) throw PrecisionError("is_special: det(g) cannot be checked at this precision");
  return determinant(G_) == RingElem(ctx(), 1).times_p_pow(e);
}

LoopGroupElt LoopGroupElt::operator*(const LoopGroupElt& rhs) const {
  auto [a, b] = common(G_, rhs.G_);
  return LoopGroupElt(a * b, shift_ + rhs.shift_);
}

LoopGroupElt LoopGroupElt::inverse() const {
  const auto d = determinant(G_);
  const int k = d.valuation();
  auto adj = adjugate(G_);
  auto unit = d.div_p_pow(k);
  if (k > 0) {
    // the unit part of det G is only known modulo p^{N-k}
    const auto lower = ctx()->with_precision(ctx()->precision() - k);
    adj = adj.reduce_to(lower);
    unit = unit.reduce_to(lower);
  }
  return LoopGroupElt(adj.scaled(unit.inv()), k - shift_);
}

bool LoopGroupElt::commutes_with(const LoopGroupElt& other) const {
  auto [a, b] = common(G_, other.G_);
  return a * b == b * a;
}

bool operator==(const LoopGroupElt& x, const LoopGroupElt& y) {
  const int t = std::max(x.shift_, y.shift_);
  auto [a, b] = common(x.G_.times_p_pow(t - x.shift_), y.G_.times_p_pow(t - y.shift_));
  return a == b;
}

int default_loop_precision(std::int64_t p) {
  int N = 0;
  __int128 v = 1;
  while (v * p <= (static_cast<__int128>(1) << 62)) {
    v *= p;
    ++N;
  }
  return N;
}

Matrix scale_by_p(const Matrix& M, int e) {
  if (e >= 0) return M.times_p_pow(e);
  const int k = -e;
  if (M.valuation() < k) throw InputError("scale_by_p: matrix is not divisible by p^" + std::to_string(k));
  if (M.ctx()->precision() - k < 1) throw PrecisionError("scale_by_p: no precision left after division");
  const auto lower = M.ctx()->with_precision(M.ctx()->precision() - k);
  Matrix out(lower, M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) out.at(i, j) = M.at(i, j).div_p_pow(k).reduce_to(lower);
  return out;
}

TorsionModule coset_module(const LoopGroupElt& g, int a) {
  if (a > g.valuation())
    throw InputError("level " + std::to_string(a) + " exceeds v(g) = " + std::to_string(g.valuation()) + "; p^a O^n does not contain g O^n");
  return TorsionModule(IsogenyMatrix(scale_by_p(g.mantissa().transpose(), -a - g.shift())));
}

GradedLine coset_det(const LoopGroupElt& g, int a) {
  const auto Q = coset_module(g, a);
  return det_torsion(Q, reference_chain(Q));
}

RingElem cocycle_at(const LoopGroupElt& g, const LoopGroupElt& h, int a, int b) {
  if (g.n() != h.n()) throw InputError("cocycle: matrices of different sizes");
  if (!g.is_special() || !h.is_special()) throw InputError("cocycle: arguments must have determinant 1");
  const auto Qh = coset_module(h, a);
  const auto Qg = coset_module(g, b);
  const auto Qgh = coset_module(g * h, a + b);
  const Matrix map = scale_by_p(g.mantissa().transpose(), -b - g.shift());

  std::vector<std::vector<RingElem>> vectors;
  for (const auto& w : reference_chain(Qh).vectors) {
    auto x = Qh.lift(w);
    const auto& xc = x.front().ctx();
    if (xc->precision() > map.ctx()->precision()) {
      for (auto& e : x) e = e.reduce_to(map.ctx());
      vectors.push_back(vec_mul(x, map));
    } else {
      vectors.push_back(vec_mul(x, map.reduce_to(xc)));
    }
  }
  for (const auto& y : reference_chain(Qg).vectors) vectors.push_back(Qg.lift(y));
  return det_torsion(Qgh, chain_from_vectors(Qgh, vectors)).scalar;
}

RingElem cocycle(const LoopGroupElt& g, const LoopGroupElt& h, std::optional<int> a) {
  if (a) return cocycle_at(g, h, *a, *a);
  return cocycle_at(g, h, h.valuation(), g.valuation());
}

RingElem commutator_pairing(const LoopGroupElt& g, const LoopGroupElt& h, std::optional<int> a) {
  if (!g.commutes_with(h)) throw InputError("commutator_pairing: arguments do not commute");
  return cocycle(g, h, a) * cocycle(h, g, a).inv();
}

}  // namespace wittgrass

#include "wittgrass/lattice.hpp"

#include <sstream>

namespace wittgrass {

namespace {

void check_window(const CtxPtr& ctx, Window w) {
  if (w.size() < 1) throw InputError("lattice window must satisfy a < b");
  if (ctx->precision() != w.size()) throw ContextMismatch("lattice: ring precision differs from window size");
}

void check_compatible(const LatticeCanon& x, const LatticeCanon& y) {
  if (x.n() != y.n() || !(x.window() == y.window()) || !x.ctx()->same_ring(*y.ctx())) {
    throw ContextMismatch("lattice operation on different ambient modules");
  }
}

}  // namespace

LatticeCanon LatticeCanon::canonicalize(const Matrix& rows, Window window) {
  check_window(rows.ctx(), window);
  auto h = howell_form(rows);
  LatticeCanon L;
  L.window_ = window;
  L.gens_ = std::move(h.rows);
  L.pivot_cols_ = std::move(h.pivot_cols);
  L.pivot_exps_ = std::move(h.pivot_exps);
  return L;
}

LatticeCanon LatticeCanon::full(const CtxPtr& ctx, int n, Window window) {
  return canonicalize(Matrix::identity(ctx, n), window);
}

LatticeCanon LatticeCanon::zero(const CtxPtr& ctx, int n, Window window) {
  return canonicalize(Matrix(ctx, 0, n), window);
}

std::vector<int> elementary_exponents(const Matrix& gens) {
  const int N = gens.ctx()->precision();
  std::vector<int> e;
  if (gens.rows() > 0 && gens.cols() > 0) e = smith_normal_form(gens).exponents;
  while (static_cast<int>(e.size()) < gens.cols()) e.insert(e.begin(), N);
  if (static_cast<int>(e.size()) > gens.cols()) e.erase(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(e.size()) - gens.cols());
  return e;
}

Partition LatticeCanon::cokernel_type() const { return Partition(elementary_exponents(gens_)); }

Partition LatticeCanon::submodule_type() const {
  std::vector<int> parts;
  for (int e : elementary_exponents(gens_)) parts.push_back(window_.size() - e);
  return Partition(std::move(parts));
}

int LatticeCanon::colength() const {
  // A Howell basis writes each element uniquely as sum a_i r_i with a_i mod p^{c - k_i}.
  int len = window_.size() * (n() - static_cast<int>(pivot_exps_.size()));
  for (int k : pivot_exps_) len += k;
  return len;
}

bool LatticeCanon::contains_vector(const std::vector<RingElem>& v) const {
  if (static_cast<int>(v.size()) != n()) throw ContextMismatch("contains_vector: length mismatch");
  std::vector<RingElem> x;
  return solve_left(gens_, v, x);
}

LatticeCanon LatticeCanon::times_p() const {
  // p*M inside p^{a+1} O^n has the same coordinates as M inside p^a O^n.
  LatticeCanon L = *this;
  L.window_ = Window{window_.a + 1, window_.b + 1};
  return L;
}

std::vector<std::int64_t> LatticeCanon::key() const {
  std::vector<std::int64_t> k;
  k.push_back(gens_.rows());
  for (std::size_t i = 0; i < pivot_cols_.size(); ++i) {
    k.push_back(pivot_cols_[i]);
    k.push_back(pivot_exps_[i]);
  }
  for (int i = 0; i < gens_.rows(); ++i)
    for (int j = 0; j < gens_.cols(); ++j)
      for (auto c : gens_.at(i, j).coeffs()) k.push_back(c);
  return k;
}

std::string LatticeCanon::to_string() const {
  std::ostringstream os;
  os << "L[" << window_.a << "," << window_.b << "]" << gens_.to_string();
  return os.str();
}

bool operator==(const LatticeCanon& x, const LatticeCanon& y) {
  return x.window_ == y.window_ && x.gens_.cols() == y.gens_.cols() && x.ctx()->same_ring(*y.ctx()) && x.gens_ == y.gens_;
}

LatticeCanon lattice_sum(const LatticeCanon& x, const LatticeCanon& y) {
  check_compatible(x, y);
  return LatticeCanon::canonicalize(x.gens().stacked(y.gens()), x.window());
}

LatticeCanon lattice_intersection(const LatticeCanon& x, const LatticeCanon& y) {
  check_compatible(x, y);
  // (s, t) with s X = t Y, i.e. the left kernel of [X; -Y]; the intersection is s X.
  const Matrix neg_y = y.gens().scaled(RingElem(y.ctx(), -1));
  const Matrix K = left_kernel(x.gens().stacked(neg_y));
  Matrix S(x.ctx(), K.rows(), x.gens().rows());
  for (int i = 0; i < K.rows(); ++i)
    for (int j = 0; j < S.cols(); ++j) S.at(i, j) = K.at(i, j);
  return LatticeCanon::canonicalize(S * x.gens(), x.window());
}

bool contains(const LatticeCanon& x, const LatticeCanon& y) {
  check_compatible(x, y);
  return lattice_sum(x, y) == x;
}

IsogenyMatrix::IsogenyMatrix(Matrix A) : A_(std::move(A)) {
  if (A_.rows() != A_.cols()) throw InputError("isogeny matrix must be square");
  snf_ = smith_normal_form(A_);
  int total = 0;
  for (int e : snf_.exponents) total += e;
  if (total >= precision()) {
    throw PrecisionError("isogeny: v_p(det) >= N = " + std::to_string(precision()) + "; increase the precision");
  }
  type_ = Partition(snf_.exponents);
}

}  // namespace wittgrass

#include "wittgrass/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace wittgrass {

Matrix::Matrix(CtxPtr ctx, int rows, int cols) : ctx_(std::move(ctx)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InputError("Matrix: negative dimension");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), RingElem(ctx_));
}

Matrix Matrix::identity(const CtxPtr& ctx, int n) {
  Matrix m(ctx, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RingElem(ctx, 1);
  return m;
}

Matrix Matrix::from_ints(const CtxPtr& ctx, const std::vector<std::vector<std::int64_t>>& rows, int cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  Matrix m(ctx, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != cols) throw InputError("Matrix: ragged rows");
    for (int j = 0; j < cols; ++j) m.at(i, j) = RingElem(ctx, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

Matrix Matrix::from_rows(const CtxPtr& ctx, const std::vector<std::vector<RingElem>>& rows, int cols) {
  Matrix m(ctx, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<RingElem> Matrix::row(int i) const {
  return std::vector<RingElem>(data_.begin() + static_cast<std::ptrdiff_t>(index(i, 0)),
                               data_.begin() + static_cast<std::ptrdiff_t>(index(i, 0) + static_cast<std::size_t>(cols_)));
}

void Matrix::set_row(int i, const std::vector<RingElem>& values) {
  if (static_cast<int>(values.size()) != cols_) throw ContextMismatch("Matrix::set_row: wrong length");
  std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(index(i, 0)));
}

void Matrix::append_row(const std::vector<RingElem>& values) {
  if (static_cast<int>(values.size()) != cols_) throw ContextMismatch("Matrix::append_row: wrong length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::row_block(int first, int count) const {
  Matrix m(ctx_, count, cols_);
  for (int i = 0; i < count; ++i) m.set_row(i, row(first + i));
  return m;
}

Matrix Matrix::stacked(const Matrix& other) const {
  if (other.cols_ != cols_) throw ContextMismatch("Matrix::stacked: column mismatch");
  Matrix m = *this;
  m.data_.insert(m.data_.end(), other.data_.begin(), other.data_.end());
  m.rows_ += other.rows_;
  return m;
}

void Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void Matrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ContextMismatch("Matrix: shape mismatch");
  Matrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += rhs.data_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ContextMismatch("Matrix: shape mismatch");
  Matrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] -= rhs.data_[k];
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw ContextMismatch("Matrix: shape mismatch in product");
  Matrix m(ctx_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const RingElem& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < rhs.cols_; ++j) m.at(i, j) += a * rhs.at(k, j);
    }
  }
  return m;
}

Matrix Matrix::scaled(const RingElem& s) const {
  Matrix m = *this;
  for (auto& x : m.data_) x = x * s;
  return m;
}

Matrix Matrix::times_p_pow(int k) const {
  Matrix m = *this;
  for (auto& x : m.data_) x = x.times_p_pow(k);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(ctx_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::reduce_to(const CtxPtr& lower) const {
  Matrix m(lower, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].reduce_to(lower);
  return m;
}

Matrix Matrix::lift_to(const CtxPtr& higher) const {
  Matrix m(higher, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].lift_to(higher);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const RingElem& x) { return x.is_zero(); });
}

int Matrix::valuation() const {
  int v = ctx_->precision();
  for (const auto& x : data_) v = std::min(v, x.valuation());
  return v;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
  }
  os << ']';
  return os.str();
}

bool operator==(const Matrix& a, const Matrix& b) { return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_; }

std::vector<RingElem> zero_vector(const CtxPtr& ctx, int n) { return std::vector<RingElem>(static_cast<std::size_t>(n), RingElem(ctx)); }

std::vector<RingElem> vec_mul(const std::vector<RingElem>& x, const Matrix& A) {
  if (static_cast<int>(x.size()) != A.rows()) throw ContextMismatch("vec_mul: length mismatch");
  auto out = zero_vector(A.ctx(), A.cols());
  for (int k = 0; k < A.rows(); ++k) {
    const RingElem& a = x[static_cast<std::size_t>(k)];
    if (a.is_zero()) continue;
    for (int j = 0; j < A.cols(); ++j) out[static_cast<std::size_t>(j)] += a * A.at(k, j);
  }
  return out;
}

bool is_zero_vector(const std::vector<RingElem>& v) {
  return std::all_of(v.begin(), v.end(), [](const RingElem& x) { return x.is_zero(); });
}

namespace {

void row_axpy(Matrix& M, int target, const RingElem& f, int source) {
  for (int j = 0; j < M.cols(); ++j) M.at(target, j) -= f * M.at(source, j);
}

void col_axpy(Matrix& M, int target, const RingElem& f, int source) {
  for (int i = 0; i < M.rows(); ++i) M.at(i, target) -= f * M.at(i, source);
}

}  // namespace

SmithForm smith_normal_form(const Matrix& A) {
  const auto& ctx = A.ctx();
  const int N = ctx->precision();
  const int m = A.rows(), n = A.cols();
  const int r = std::min(m, n);
  SmithForm s{Matrix::identity(ctx, m), A, Matrix::identity(ctx, n), {}, RingElem(ctx, 1)};
  RingElem det_v(ctx, 1);
  std::vector<int> exps(static_cast<std::size_t>(r), N);
  for (int t = 0; t < r; ++t) {
    int bi = -1, bj = -1, best = N;
    for (int i = t; i < m && best > 0; ++i) {
      for (int j = t; j < n; ++j) {
        const int v = s.D.at(i, j).valuation();
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    }
    if (bi < 0) break;
    if (bi != t) {
      s.D.swap_rows(t, bi);
      s.U.swap_rows(t, bi);
      s.det_u = -s.det_u;
    }
    if (bj != t) {
      s.D.swap_cols(t, bj);
      s.V.swap_cols(t, bj);
      det_v = -det_v;
    }
    const RingElem u_inv = s.D.at(t, t).div_p_pow(best).inv();
    for (int j = 0; j < n; ++j) s.D.at(t, j) *= u_inv;
    for (int j = 0; j < m; ++j) s.U.at(t, j) *= u_inv;
    s.det_u *= u_inv;
    for (int i = t + 1; i < m; ++i) {
      if (s.D.at(i, t).is_zero()) continue;
      const RingElem f = s.D.at(i, t).div_p_pow(best);
      row_axpy(s.D, i, f, t);
      row_axpy(s.U, i, f, t);
    }
    for (int j = t + 1; j < n; ++j) {
      if (s.D.at(t, j).is_zero()) continue;
      const RingElem f = s.D.at(t, j).div_p_pow(best);
      col_axpy(s.D, j, f, t);
      col_axpy(s.V, j, f, t);
    }
    exps[static_cast<std::size_t>(t)] = best;
  }
  // Pivots were found in increasing valuation; reverse to decreasing order.
  for (int a = 0, b = r - 1; a < b; ++a, --b) {
    s.D.swap_rows(a, b);
    s.D.swap_cols(a, b);
    s.U.swap_rows(a, b);
    s.V.swap_cols(a, b);
    s.det_u = -s.det_u;
    det_v = -det_v;
    std::swap(exps[static_cast<std::size_t>(a)], exps[static_cast<std::size_t>(b)]);
  }
  if (n > 0) {
    const RingElem inv = det_v.inv();
    for (int i = 0; i < n; ++i) s.V.at(i, 0) *= inv;
    if (m > 0) {
      for (int j = 0; j < m; ++j) s.U.at(0, j) *= det_v;
      s.det_u *= det_v;
    }
  }
  s.exponents = std::move(exps);
  return s;
}

RingElem determinant(const Matrix& A) {
  if (A.rows() != A.cols()) throw ContextMismatch("determinant: matrix is not square");
  const auto s = smith_normal_form(A);
  int total = 0;
  for (int e : s.exponents) total += e;
  return RingElem(A.ctx(), 1).times_p_pow(std::min(total, A.ctx()->precision())) * s.det_u.inv();
}

Matrix inverse(const Matrix& A) {
  if (A.rows() != A.cols()) throw ContextMismatch("inverse: matrix is not square");
  const auto s = smith_normal_form(A);
  for (int e : s.exponents) {
    if (e != 0) throw NotAUnit("inverse: matrix is not invertible");
  }
  return s.V * s.U;
}

bool solve_left(const Matrix& A, const std::vector<RingElem>& b, std::vector<RingElem>& x) {
  if (static_cast<int>(b.size()) != A.cols()) throw ContextMismatch("solve_left: length mismatch");
  const auto s = smith_normal_form(A);
  const auto c = vec_mul(b, s.V);
  const int r = static_cast<int>(s.exponents.size());
  auto y = zero_vector(A.ctx(), A.rows());
  for (int i = 0; i < r; ++i) {
    const auto& ci = c[static_cast<std::size_t>(i)];
    const int e = s.exponents[static_cast<std::size_t>(i)];
    if (ci.valuation() < e) return false;
    y[static_cast<std::size_t>(i)] = ci.div_p_pow(e);
  }
  for (int j = r; j < A.cols(); ++j) {
    if (!c[static_cast<std::size_t>(j)].is_zero()) return false;
  }
  x = vec_mul(y, s.U);
  return true;
}

Matrix left_kernel(const Matrix& A) {
  const auto s = smith_normal_form(A);
  const int N = A.ctx()->precision();
  const int r = static_cast<int>(s.exponents.size());
  Matrix K(A.ctx(), 0, A.rows());
  for (int i = 0; i < A.rows(); ++i) {
    const int e = i < r ? s.exponents[static_cast<std::size_t>(i)] : N;
    if (e == 0) continue;
    auto row = s.U.row(i);
    for (auto& x : row) x = x.times_p_pow(N - e);
    K.append_row(row);
  }
  return K;
}

HowellForm howell_form(const Matrix& A) {
  const auto& ctx = A.ctx();
  const int N = ctx->precision();
  const int n = A.cols();
  std::vector<std::vector<RingElem>> pool;
  for (int i = 0; i < A.rows(); ++i) {
    auto r = A.row(i);
    if (!is_zero_vector(r)) pool.push_back(std::move(r));
  }
  HowellForm h{Matrix(ctx, 0, n), {}, {}};
  std::vector<std::vector<RingElem>> out;
  for (int j = 0; j < n && !pool.empty(); ++j) {
    std::size_t best_idx = pool.size();
    int best = N;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      const int v = pool[k][static_cast<std::size_t>(j)].valuation();
      if (v < best) {
        best = v;
        best_idx = k;
      }
    }
    if (best_idx == pool.size()) continue;
    auto piv = std::move(pool[best_idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best_idx));
    const RingElem u_inv = piv[static_cast<std::size_t>(j)].div_p_pow(best).inv();
    for (auto& x : piv) x *= u_inv;
    for (auto& r : pool) {
      const auto& e = r[static_cast<std::size_t>(j)];
      if (e.is_zero()) continue;
      const RingElem f = e.div_p_pow(best);
      for (int c = j; c < n; ++c) r[static_cast<std::size_t>(c)] -= f * piv[static_cast<std::size_t>(c)];
    }
    if (best > 0) {
      std::vector<RingElem> extra;
      extra.reserve(piv.size());
      for (const auto& x : piv) extra.push_back(x.times_p_pow(N - best));
      pool.push_back(std::move(extra));
    }
    std::erase_if(pool, [](const std::vector<RingElem>& r) { return is_zero_vector(r); });
    out.push_back(std::move(piv));
    h.pivot_cols.push_back(j);
    h.pivot_exps.push_back(best);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto j = static_cast<std::size_t>(h.pivot_cols[i]);
    const int k = h.pivot_exps[i];
    for (std::size_t above = 0; above < i; ++above) {
      const RingElem x = out[above][j];
      const RingElem t = (x - x.mod_p_pow(k)).div_p_pow(k);
      if (t.is_zero()) continue;
      for (std::size_t c = j; c < static_cast<std::size_t>(n); ++c) out[above][c] -= t * out[i][c];
    }
  }
  for (auto& r : out) h.rows.append_row(r);
  return h;
}

}  // namespace wittgrass

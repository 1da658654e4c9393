#pragma once

// Dense matrices over the chain ring O/p^N, Smith and Howell normal forms.
// Vectors are rows; a matrix acts on the right of row vectors.

#include <string>
#include <vector>

#include "wittgrass/ring.hpp"

namespace wittgrass {

class Matrix {
 public:
  Matrix() = default;
  Matrix(CtxPtr ctx, int rows, int cols);
  static Matrix identity(const CtxPtr& ctx, int n);
  static Matrix from_ints(const CtxPtr& ctx, const std::vector<std::vector<std::int64_t>>& rows, int cols = -1);
  static Matrix from_rows(const CtxPtr& ctx, const std::vector<std::vector<RingElem>>& rows, int cols);

  const CtxPtr& ctx() const { return ctx_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  RingElem& at(int i, int j) { return data_[index(i, j)]; }
  const RingElem& at(int i, int j) const { return data_[index(i, j)]; }
  std::vector<RingElem> row(int i) const;
  void set_row(int i, const std::vector<RingElem>& values);
  void append_row(const std::vector<RingElem>& values);
  Matrix row_block(int first, int count) const;
  // Rows of *this followed by rows of other.
  Matrix stacked(const Matrix& other) const;
  void swap_rows(int a, int b);
  void swap_cols(int a, int b);

  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix scaled(const RingElem& s) const;
  Matrix times_p_pow(int k) const;
  Matrix transpose() const;
  Matrix reduce_to(const CtxPtr& lower) const;
  Matrix lift_to(const CtxPtr& higher) const;

  bool is_zero() const;
  // Smallest valuation of an entry (precision() for the zero matrix).
  int valuation() const;

  std::string to_string() const;
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j); }

  CtxPtr ctx_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<RingElem> data_;
};

std::vector<RingElem> zero_vector(const CtxPtr& ctx, int n);
// Row vector times matrix.
std::vector<RingElem> vec_mul(const std::vector<RingElem>& x, const Matrix& A);
bool is_zero_vector(const std::vector<RingElem>& v);

struct SmithForm {
  Matrix U;  // rows x rows, invertible
  Matrix D;  // rows x cols, diagonal
  Matrix V;  // cols x cols, invertible, det V = 1
  // D_ii = p^{exponents[i]}, weakly decreasing; exponent N means the entry is 0.
  std::vector<int> exponents;
  // det U as a unit (det V is normalized to 1).
  RingElem det_u;
};

// U * A * V = D.
SmithForm smith_normal_form(const Matrix& A);

// Determinant over O/p^N (square matrices).
RingElem determinant(const Matrix& A);
// Throws NotAUnit if A is not invertible over O/p^N.
Matrix inverse(const Matrix& A);

// Some x with x * A = b, or false if none exists.
bool solve_left(const Matrix& A, const std::vector<RingElem>& b, std::vector<RingElem>& x);
// Generators of {x : x * A = 0}.
Matrix left_kernel(const Matrix& A);

struct HowellForm {
  Matrix rows;                 // canonical generators, one per pivot
  std::vector<int> pivot_cols;
  std::vector<int> pivot_exps;  // pivot entry is p^{pivot_exps[i]}
};

// Canonical generator matrix of the row span: pivot entries are p-powers,
// entries above pivots reduced coefficient-wise mod the pivot, and the span
// of rows with pivot column >= j contains every span element vanishing
// before column j. Two matrices have the same row span iff their forms agree.
HowellForm howell_form(const Matrix& A);

}  // namespace wittgrass

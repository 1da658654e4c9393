#pragma once

/**
 * @file lattice.hpp
 * @brief Lattices p^b O^n ⊂ M ⊂ p^a O^n and isogeny matrices over O/p^N.
 *
 * A windowed lattice is stored as its image in (p^a O / p^b O)^n ≅ (O/p^c)^n,
 * c = b - a, by the canonical Howell generator matrix. Cokernel types are read
 * off the Smith form; the type is that of p^a O^n / M.
 *
 * Isogenies follow the row convention: A presents Q = O^n / rowspan(A).
 */

#include <string>
#include <vector>

#include "wittgrass/linalg.hpp"
#include "wittgrass/partitions.hpp"

namespace wittgrass {

struct Window {
  int a = 0;
  int b = 1;
  int size() const { return b - a; }
  friend bool operator==(const Window&, const Window&) = default;
};

class LatticeCanon {
 public:
  LatticeCanon() = default;

  // Canonical form of the row span of `rows`. rows.ctx() must have precision
  // equal to the window size.
  static LatticeCanon canonicalize(const Matrix& rows, Window window);
  static LatticeCanon canonicalize(const Matrix& rows) { return canonicalize(rows, Window{0, rows.ctx()->precision()}); }
  static LatticeCanon full(const CtxPtr& ctx, int n, Window window);
  static LatticeCanon zero(const CtxPtr& ctx, int n, Window window);

  int n() const { return gens_.cols(); }
  const Window& window() const { return window_; }
  const CtxPtr& ctx() const { return gens_.ctx(); }
  const Matrix& gens() const { return gens_; }
  const std::vector<int>& pivot_cols() const { return pivot_cols_; }
  const std::vector<int>& pivot_exps() const { return pivot_exps_; }

  // Type of p^a O^n / M.
  Partition cokernel_type() const;
  // Type of M / p^b O^n.
  Partition submodule_type() const;
  // Length of p^a O^n / M.
  int colength() const;

  bool contains_vector(const std::vector<RingElem>& v) const;
  // p * M, with the window shifted by one.
  LatticeCanon times_p() const;

  // Flattened coefficients; equal keys iff equal lattices in the same window.
  std::vector<std::int64_t> key() const;
  std::string to_string() const;

  friend bool operator==(const LatticeCanon& x, const LatticeCanon& y);
  friend bool operator<(const LatticeCanon& x, const LatticeCanon& y) { return x.key() < y.key(); }

 private:
  Window window_;
  Matrix gens_;
  std::vector<int> pivot_cols_;
  std::vector<int> pivot_exps_;
};

LatticeCanon lattice_sum(const LatticeCanon& x, const LatticeCanon& y);
LatticeCanon lattice_intersection(const LatticeCanon& x, const LatticeCanon& y);
// x ⊇ y.
bool contains(const LatticeCanon& x, const LatticeCanon& y);

// Elementary divisor exponents of a generator matrix, decreasing (precision()
// stands for a zero divisor); padded with precision() up to the column count.
std::vector<int> elementary_exponents(const Matrix& gens);

class IsogenyMatrix {
 public:
  // Square matrix with v_p(det) < N; throws PrecisionError otherwise.
  explicit IsogenyMatrix(Matrix A);

  const Matrix& matrix() const { return A_; }
  int n() const { return A_.rows(); }
  int precision() const { return A_.ctx()->precision(); }
  const CtxPtr& ctx() const { return A_.ctx(); }
  const SmithForm& smith() const { return snf_; }
  Partition cokernel_type() const { return type_; }
  int module_length() const { return type_.total(); }

 private:
  Matrix A_;
  SmithForm snf_;
  Partition type_;
};

}  // namespace wittgrass

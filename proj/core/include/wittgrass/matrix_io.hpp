#pragma once

// Text formats for exact p-adic entries and matrices.
//
// Entry:  [-] D [*p^v]   or   [-] p^v [*(D)]
//   D = d0.d1.d2...  field codes of Teichmuller digits, value sum_i [d_i] p^i.
// Matrix file, one directive per line, '#' starts a comment:
//   p 3
//   d 1          (default 1)
//   N 6
//   n 2
//   shift -1     (optional; the whole matrix is multiplied by p^shift)
//   row 1 0
//   row 0 2.1*p^1

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wittgrass/linalg.hpp"

namespace wittgrass {

struct DigitEntry {
  bool negative = false;
  int shift = 0;
  std::vector<std::int64_t> digits;

  bool is_zero() const;
};

// Throws InputError (without position information).
DigitEntry parse_entry(std::string_view text);
// Value times p^extra in O/p^N. Requires shift + extra >= 0.
RingElem entry_value(const DigitEntry& e, const CtxPtr& ctx, int extra = 0);
// Canonical text of x: Teichmuller digits of the unit part and the valuation.
std::string format_entry(const RingElem& x);

struct MatrixFile {
  std::optional<std::int64_t> p;
  std::optional<int> d;
  std::optional<int> N;
  std::optional<int> n;
  int shift = 0;
  std::vector<std::vector<DigitEntry>> rows;

  FieldParams field() const;
  // Smallest total exponent shift + entry shift over nonzero entries (0 if none).
  int min_exponent() const;
};

// Errors carry "line L, column C".
MatrixFile parse_matrix_text(std::string_view text, const std::string& source = "<input>");
MatrixFile read_matrix_file(const std::string& path);

// Integral matrix over ctx; throws InputError if an entry has negative exponent.
Matrix to_matrix(const MatrixFile& file, const CtxPtr& ctx, int extra = 0);

std::string format_matrix_file(const Matrix& A, int shift = 0);

}  // namespace wittgrass

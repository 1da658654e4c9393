#include "wittgrass/matrix_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace wittgrass {

namespace {

std::int64_t parse_int(std::string_view s, const char* what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError(std::string("expected ") + what + ", got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::int64_t> parse_digits(std::string_view s) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    const auto dot = s.find('.', start);
    const auto part = s.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    const auto v = parse_int(part, "digit");
    if (v < 0) throw InputError("negative digit");
    out.push_back(v);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

int parse_exponent(std::string_view s) {
  if (s.substr(0, 2) != "p^") throw InputError("expected p^v, got '" + std::string(s) + "'");
  const auto v = parse_int(s.substr(2), "integer exponent");
  if (v < -1000000 || v > 1000000) throw InputError("exponent out of range");
  return static_cast<int>(v);
}

}  // namespace

bool DigitEntry::is_zero() const {
  return std::all_of(digits.begin(), digits.end(), [](std::int64_t d) { return d == 0; });
}

DigitEntry parse_entry(std::string_view text) {
  DigitEntry e;
  if (!text.empty() && text.front() == '-') {
    e.negative = true;
    text.remove_prefix(1);
  }
  if (text.empty()) throw InputError("empty entry");
  if (text.substr(0, 2) == "p^") {
    const auto star = text.find('*');
    e.shift = parse_exponent(text.substr(0, star));
    if (star == std::string_view::npos) {
      e.digits = {1};
    } else {
      auto rest = text.substr(star + 1);
      if (!rest.empty() && rest.front() == '(') {
        if (rest.back() != ')') throw InputError("unbalanced parenthesis in '" + std::string(text) + "'");
        rest = rest.substr(1, rest.size() - 2);
      }
      e.digits = parse_digits(rest);
    }
  } else {
    const auto star = text.find('*');
    auto digits = text.substr(0, star);
    if (!digits.empty() && digits.front() == '(' && digits.back() == ')') digits = digits.substr(1, digits.size() - 2);
    e.digits = parse_digits(digits);
    if (star != std::string_view::npos) e.shift = parse_exponent(text.substr(star + 1));
  }
  return e;
}

RingElem entry_value(const DigitEntry& e, const CtxPtr& ctx, int extra) {
  const int total = e.shift + extra;
  if (e.is_zero()) return RingElem(ctx);
  if (total < 0) throw InputError("entry has negative p-adic valuation where an integral value is required");
  const auto field_ctx = ctx->residue_field();
  RingElem acc(ctx);
  for (std::size_t i = 0; i < e.digits.size(); ++i) {
    if (e.digits[i] >= ctx->q()) {
      throw InputError("digit " + std::to_string(e.digits[i]) + " is not a field code below q = " + std::to_string(ctx->q()));
    }
    const int pos = total + static_cast<int>(i);
    if (pos >= ctx->precision()) break;
    acc += teichmuller(ctx, RingElem::from_field_code(field_ctx, e.digits[i])).times_p_pow(pos);
  }
  return e.negative ? -acc : acc;
}

std::string format_entry(const RingElem& x) {
  if (x.is_zero()) return "0";
  const int v = x.valuation();
  const auto& ctx = x.ctx();
  const auto unit = x.div_p_pow(v).reduce_to(ctx->with_precision(ctx->precision() - v));
  auto digits = teich_expand(unit);
  while (digits.size() > 1 && digits.back().is_zero()) digits.pop_back();
  std::string s;
  for (std::size_t i = 0; i < digits.size(); ++i) s += (i ? "." : "") + std::to_string(digits[i].field_code());
  if (v != 0) s += "*p^" + std::to_string(v);
  return s;
}

FieldParams MatrixFile::field() const {
  if (!p) throw InputError("matrix file: missing 'p'");
  return make_field(*p, d.value_or(1));
}

int MatrixFile::min_exponent() const {
  bool any = false;
  int best = 0;
  for (const auto& r : rows)
    for (const auto& e : r) {
      if (e.is_zero()) continue;
      const int v = shift + e.shift;
      best = any ? std::min(best, v) : v;
      any = true;
    }
  return best;
}

MatrixFile parse_matrix_text(std::string_view text, const std::string& source) {
  MatrixFile f;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    // Tokens with 1-based columns.
    std::vector<std::pair<std::string_view, int>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      tokens.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
      i = j;
    }
    if (tokens.empty()) continue;
    auto fail = [&](int col, const std::string& msg) -> InputError {
      return InputError(source + ": line " + std::to_string(line_no) + ", column " + std::to_string(col) + ": " + msg);
    };
    const auto key = tokens[0].first;
    {
      if (key == "row") {
        std::vector<DigitEntry> row;
        for (std::size_t t = 1; t < tokens.size(); ++t) {
          try {
            row.push_back(parse_entry(tokens[t].first));
          } catch (const InputError& e) {
            throw fail(tokens[t].second, e.what());
          }
        }
        if (f.n && static_cast<int>(row.size()) != *f.n) {
          throw fail(tokens[0].second, "row has " + std::to_string(row.size()) + " entries, expected n = " + std::to_string(*f.n));
        }
        f.rows.push_back(std::move(row));
        continue;
      }
      if (tokens.size() != 2) throw fail(tokens[0].second, "expected '<key> <integer>'");
      std::int64_t value = 0;
      try {
        value = parse_int(tokens[1].first, "integer");
      } catch (const InputError& e) {
        throw fail(tokens[1].second, e.what());
      }
      if (key == "p") {
        if (!is_prime(value)) throw fail(tokens[1].second, "p must be prime");
        f.p = value;
      } else if (key == "d") {
        if (value < 1 || value > kMaxDegree) throw fail(tokens[1].second, "d out of range");
        f.d = static_cast<int>(value);
      } else if (key == "N") {
        if (value < 1 || value > 62) throw fail(tokens[1].second, "N out of range");
        f.N = static_cast<int>(value);
      } else if (key == "n") {
        if (value < 0 || value > 64) throw fail(tokens[1].second, "n out of range");
        if (!f.rows.empty()) throw fail(tokens[0].second, "'n' must precede the rows");
        f.n = static_cast<int>(value);
      } else if (key == "shift") {
        if (value < -1000 || value > 1000) throw fail(tokens[1].second, "shift out of range");
        f.shift = static_cast<int>(value);
      } else {
        throw fail(tokens[0].second, "unknown key '" + std::string(key) + "'");
      }
    }
  }
  if (!f.n) {
    if (f.rows.empty()) throw InputError(source + ": missing 'n'");
    f.n = static_cast<int>(f.rows.front().size());
    for (std::size_t i = 0; i < f.rows.size(); ++i) {
      if (static_cast<int>(f.rows[i].size()) != *f.n) throw InputError(source + ": ragged rows");
    }
  }
  return f;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix_text(ss.str(), path);
}

Matrix to_matrix(const MatrixFile& file, const CtxPtr& ctx, int extra) {
  const int n = file.n.value_or(0);
  Matrix A(ctx, static_cast<int>(file.rows.size()), n);
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < n; ++j) {
      A.at(i, j) = entry_value(file.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], ctx, file.shift + extra);
    }
  return A;
}

std::string format_matrix_file(const Matrix& A, int shift) {
  const auto& ctx = A.ctx();
  std::ostringstream os;
  os << "p " << ctx->p() << "\nd " << ctx->degree() << "\nN " << ctx->precision() << "\nn " << A.cols() << "\n";
  if (shift != 0) os << "shift " << shift << "\n";
  for (int i = 0; i < A.rows(); ++i) {
    os << "row";
    for (int j = 0; j < A.cols(); ++j) os << ' ' << format_entry(A.at(i, j));
    os << "\n";
  }
  return os.str();
}

}  // namespace wittgrass

#include "wittgrass/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "wittgrass/errors.hpp"

namespace wittgrass {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int x : parts_) {
    if (x < 0) throw InputError("partition parts must be nonnegative");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto field = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw InputError("partition: cannot parse '" + std::string(field) + "' in '" + std::string(text) + "'");
    }
    if (value < 0) throw InputError("partition: negative part in '" + std::string(text) + "'");
    if (!parts.empty() && value > parts.back()) {
      throw InputError("partition: parts must be weakly decreasing in '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int n, int k) {
  if (n < 0 || k < 0) throw InputError("partition: negative rectangle");
  return Partition(std::vector<int>(static_cast<std::size_t>(n), k));
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int j) const {
  if (j < 1 || j > length()) return 0;
  return parts_[static_cast<std::size_t>(j - 1)];
}

int Partition::row_count(int i) const {
  int count = 0;
  for (int x : parts_) {
    if (x > i) ++count;
  }
  return count;
}

Partition Partition::minus_one() const {
  std::vector<int> out;
  for (int x : parts_) out.push_back(x - 1);
  return Partition(std::move(out));
}

Partition Partition::complement(int n, int c) const {
  if (length() > n || largest() > c) throw InputError("partition " + to_string() + " does not fit the box");
  std::vector<int> out;
  for (int j = n; j >= 1; --j) out.push_back(c - part(j));
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

std::string method_name(DominanceMethod m) {
  switch (m) {
    case DominanceMethod::Epsilon:
      return "epsilon";
    case DominanceMethod::PartialSums:
      return "partial_sums";
    case DominanceMethod::RowTails:
      return "row_tails";
    case DominanceMethod::PPowerLengths:
      return "p_power_lengths";
  }
  return "?";
}

std::optional<std::vector<int>> epsilon_witness(const Partition& lambda, const Partition& mu) {
  // lambda_j - mu_j = c_j - c_{j-1} with c_0 = 0; solve from the last index
  // (where c_L = 0) downwards and check the first equation closes up.
  const int L = std::max(lambda.length(), mu.length());
  std::vector<int> c(static_cast<std::size_t>(L) + 1, 0);
  for (int j = L; j >= 2; --j) {
    c[static_cast<std::size_t>(j - 1)] = c[static_cast<std::size_t>(j)] - (lambda.part(j) - mu.part(j));
  }
  if (L >= 1 && c[1] != lambda.part(1) - mu.part(1)) return std::nullopt;
  std::vector<int> out(c.begin() + 1, c.end());
  for (int x : out) {
    if (x < 0) return std::nullopt;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

int power_length(const Partition& lambda, int m) {
  // p^m (O/p^k) = O/p^{max(k-m,0)}.
  int len = 0;
  for (int k : lambda.parts()) len += std::max(k - m, 0);
  return len;
}

bool dominates(const Partition& lambda, const Partition& mu, DominanceMethod method) {
  switch (method) {
    case DominanceMethod::Epsilon:
      return epsilon_witness(lambda, mu).has_value();
    case DominanceMethod::PartialSums: {
      const int L = std::max(lambda.length(), mu.length());
      int sl = 0, sm = 0;
      for (int j = 1; j <= L; ++j) {
        sl += lambda.part(j);
        sm += mu.part(j);
        if (sl < sm) return false;
      }
      return sl == sm;
    }
    case DominanceMethod::RowTails: {
      const int top = std::max(lambda.largest(), mu.largest());
      int tl = 0, tm = 0;
      for (int i = top; i >= 0; --i) {
        tl += lambda.row_count(i);
        tm += mu.row_count(i);
        if (tl < tm) return false;
      }
      return tl == tm;
    }
    case DominanceMethod::PPowerLengths: {
      if (power_length(lambda, 0) != power_length(mu, 0)) return false;
      const int top = std::max(lambda.largest(), mu.largest());
      for (int m = 1; m <= top; ++m) {
        if (power_length(lambda, m) < power_length(mu, m)) return false;
      }
      return true;
    }
  }
  return false;
}

namespace {

void gen_partitions(int remaining, int max_part, int slots, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(remaining - k, k, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int total, int max_parts, int max_part) {
  if (total < 0) throw InputError("partitions_of: negative total");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(total, max_part < 0 ? total : max_part, max_parts < 0 ? total : max_parts, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(int n, int c) {
  std::vector<Partition> out;
  for (int t = 0; t <= n * c; ++t) {
    for (auto& p : partitions_of(t, n, c)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), report_order);
  return out;
}

bool report_order(const Partition& a, const Partition& b) {
  const int ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  return a < b;
}

}  // namespace wittgrass

#pragma once

// Partitions as types of finite torsion modules, and the dominance order.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wittgrass {

class Partition {
 public:
  Partition() = default;
  // Any order is accepted; parts are sorted decreasing and zeros dropped.
  // Throws InputError on negative parts.
  explicit Partition(std::vector<int> parts);

  // "3,1,1" (weakly decreasing, nonnegative); "" and "()" are the empty partition.
  static Partition parse(std::string_view text);
  // n copies of k.
  static Partition rectangle(int n, int k);

  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 1-based, 0 beyond the last part.
  int part(int j) const;
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  // n_lambda(i) = #{j : lambda_j > i}.
  int row_count(int i) const;
  Partition minus_one() const;
  // The complementary type (c - lambda_n, ..., c - lambda_1) inside an n x c box.
  Partition complement(int n, int c) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

enum class DominanceMethod { Epsilon, PartialSums, RowTails, PPowerLengths };

inline constexpr DominanceMethod kAllDominanceMethods[] = {DominanceMethod::Epsilon, DominanceMethod::PartialSums,
                                                           DominanceMethod::RowTails, DominanceMethod::PPowerLengths};

std::string method_name(DominanceMethod m);

// Coefficients c_1, c_2, ... with lambda - mu = sum_j c_j eps_j and every c_j >= 0,
// eps_j = e_j - e_{j+1}; trailing zeros trimmed. nullopt if lambda does not dominate mu.
std::optional<std::vector<int>> epsilon_witness(const Partition& lambda, const Partition& mu);

// lambda >= mu. Different totals give false.
bool dominates(const Partition& lambda, const Partition& mu, DominanceMethod method = DominanceMethod::PartialSums);

// Length of p^m Q for Q of type lambda.
int power_length(const Partition& lambda, int m);

// All partitions of `total` with at most max_parts parts, each at most max_part
// (negative = unbounded), in decreasing lexicographic order.
std::vector<Partition> partitions_of(int total, int max_parts = -1, int max_part = -1);

// All partitions fitting in an n x c box, ordered by (total, lexicographic).
std::vector<Partition> partitions_in_box(int n, int c);

// Ordering used for reports: total first, then lexicographic on parts.
bool report_order(const Partition& a, const Partition& b);

}  // namespace wittgrass

#include "doctest.h"

#include <functional>

#include "wittgrass/errors.hpp"
#include "wittgrass/partitions.hpp"

using namespace wittgrass;

namespace {

// Oracle: search every nonnegative coefficient vector c with entries <= total.
bool brute_epsilon(const Partition& lambda, const Partition& mu) {
  const int L = std::max(lambda.length(), mu.length());
  const int bound = std::max(lambda.total(), mu.total());
  std::vector<int> c(static_cast<std::size_t>(std::max(L - 1, 0)), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == c.size()) {
      for (int j = 1; j <= L + 1; ++j) {
        const int cj = j - 1 < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(j - 1)] : 0;
        const int cprev = j >= 2 && j - 2 < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(j - 2)] : 0;
        if (lambda.part(j) - mu.part(j) != cj - cprev) return false;
      }
      return true;
    }
    for (int v = 0; v <= bound; ++v) {
      c[pos] = v;
      if (rec(pos + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("normalization and parsing") {
  CHECK(Partition({1, 0, 3, 1}).parts() == std::vector<int>{3, 1, 1});
  CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
  CHECK(Partition::parse("") == Partition());
  CHECK(Partition::parse("()").empty());
  CHECK(Partition::parse(" 2 , 2 ,0") == Partition({2, 2}));
  CHECK_THROWS_AS(Partition::parse("1,2"), InputError);
  CHECK_THROWS_AS(Partition::parse("a"), InputError);
  CHECK_THROWS_AS(Partition::parse("2,,1"), InputError);
  CHECK_THROWS_AS(Partition({-1}), InputError);
  CHECK(Partition({3, 1}).to_string() == "(3,1)");
}

TEST_CASE("row counts") {
  const Partition l21({2, 1});
  CHECK(l21.row_count(0) == 2);
  CHECK(l21.row_count(1) == 1);
  CHECK(l21.row_count(2) == 0);
  CHECK(Partition().row_count(0) == 0);
  CHECK(Partition().row_count(5) == 0);
  CHECK(Partition({3, 3, 1}).row_count(2) == 2);
}

TEST_CASE("minus one") {
  CHECK(Partition({2, 1}).minus_one() == Partition({1}));
  CHECK(Partition().minus_one() == Partition());
  CHECK(Partition({3, 3}).minus_one() == Partition({2, 2}));
}

TEST_CASE("dominance examples") {
  CHECK(dominates(Partition({2}), Partition({1, 1})));
  CHECK(*epsilon_witness(Partition({2}), Partition({1, 1})) == std::vector<int>{1});
  CHECK_FALSE(dominates(Partition({1, 1}), Partition({2})));
  CHECK(*epsilon_witness(Partition({3, 1, 1}), Partition({2, 2, 1})) == std::vector<int>{1});
  CHECK(brute_epsilon(Partition({3, 1, 1}), Partition({2, 2, 1})));
  CHECK_FALSE(dominates(Partition({3}), Partition({1, 1})));
  CHECK_FALSE(epsilon_witness(Partition({3}), Partition({1, 1})).has_value());
}

TEST_CASE("epsilon witnesses reproduce the difference") {
  for (int t = 0; t <= 8; ++t)
    for (const auto& l : partitions_of(t))
      for (const auto& m : partitions_of(t)) {
        const auto w = epsilon_witness(l, m);
        if (!w) continue;
        const int L = std::max(l.length(), m.length()) + 1;
        for (int j = 1; j <= L; ++j) {
          const int cj = j <= static_cast<int>(w->size()) ? (*w)[static_cast<std::size_t>(j - 1)] : 0;
          const int cprev = j >= 2 && j - 1 <= static_cast<int>(w->size()) ? (*w)[static_cast<std::size_t>(j - 2)] : 0;
          CHECK(l.part(j) - m.part(j) == cj - cprev);
        }
      }
}

TEST_CASE("brute-force epsilon search agrees for small totals") {
  for (int t = 0; t <= 6; ++t)
    for (const auto& l : partitions_of(t))
      for (const auto& m : partitions_of(t)) CHECK(brute_epsilon(l, m) == dominates(l, m, DominanceMethod::Epsilon));
}

TEST_CASE("four characterizations agree and form a partial order") {
  std::vector<Partition> all;
  for (int t = 0; t <= 8; ++t)
    for (auto& p : partitions_of(t)) all.push_back(p);
  for (const auto& l : all)
    for (const auto& m : all) {
      const bool ref = dominates(l, m, DominanceMethod::PartialSums);
      for (auto method : kAllDominanceMethods) CHECK(dominates(l, m, method) == ref);
      if (l.total() != m.total()) CHECK_FALSE(ref);
    }
  for (int t = 0; t <= 8; ++t) {
    const auto ps = partitions_of(t);
    for (const auto& a : ps) {
      CHECK(dominates(a, a));
      for (const auto& b : ps) {
        if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
        for (const auto& c : ps) {
          if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
        }
      }
    }
  }
}

TEST_CASE("row counts of lambda - 1 shift by one") {
  for (int t = 0; t <= 8; ++t)
    for (const auto& l : partitions_of(t)) {
      int sum = 0;
      for (int i = 0; i <= 8; ++i) {
        CHECK(l.minus_one().row_count(i) == l.row_count(i + 1));
        sum += l.row_count(i);
        if (i > 0) CHECK(l.row_count(i) <= l.row_count(i - 1));
      }
      CHECK(sum == l.total());
    }
}

TEST_CASE("partition enumeration counts") {
  // Partition numbers p(0..8).
  const int expect[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int t = 0; t <= 8; ++t) CHECK(static_cast<int>(partitions_of(t).size()) == expect[t]);
  // Boxes: binomial(n + c, n) partitions fit an n x c box.
  CHECK(partitions_in_box(3, 2).size() == 10);
  CHECK(partitions_in_box(2, 2).size() == 6);
  CHECK(Partition({2, 1}).complement(3, 2) == Partition({2, 1, 0}));
  CHECK(Partition({1}).complement(3, 2) == Partition({2, 2, 1}));
}

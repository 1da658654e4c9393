#pragma once

/**
 * @file grassmannian.hpp
 * @brief F_q-points of the window Grassmannian and their Schubert strata.
 *
 * Points in window size c are the lattices p^c O^n ⊆ L ⊆ O^n, i.e. the
 * submodules of (O/p^c)^n. They are generated from upper-triangular Hermite
 * forms over O (diagonal p^{k_i}, entries right of the diagonal reduced mod
 * p^{k_j}), one task per pivot profile k.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wittgrass/lattice.hpp"

namespace wittgrass {

struct EnumOptions {
  int workers = 1;
  // Restrict to lattices of this colength (= |type|).
  std::optional<int> colength;
};

// Number of Hermite candidates the enumeration visits.
std::uint64_t lattice_candidate_count(int n, int c, std::int64_t q, std::optional<int> colength = std::nullopt);

// Every submodule of (O/p^c)^n exactly once, sorted by LatticeCanon::key().
std::vector<LatticeCanon> enumerate_lattices(int n, int c, std::int64_t q, const EnumOptions& options = {});

struct ReportOrderLess {
  bool operator()(const Partition& a, const Partition& b) const { return report_order(a, b); }
};

struct StratumTable {
  int n = 0;
  int c = 0;
  std::int64_t q = 0;
  std::map<Partition, std::uint64_t, ReportOrderLess> counts;

  std::uint64_t total() const;
  std::uint64_t count(const Partition& lambda) const;
};

StratumTable stratum_counts(int n, int c, std::int64_t q, const EnumOptions& options = {});

// Sum of counts over the dominance downset of lambda.
std::uint64_t count_leq(const StratumTable& table, const Partition& lambda);

// v_p(det(p^{-shift} G)) for an invertible matrix over O[1/p] stored as
// (shift, G mod p^N). Throws PrecisionError if det G vanishes mod p^N.
int kottwitz(const Matrix& G, int shift = 0);

// Ring context O/p^c for q = p^d; throws InputError if q is not a prime power.
CtxPtr ring_for_q(std::int64_t q, int precision);

}  // namespace wittgrass

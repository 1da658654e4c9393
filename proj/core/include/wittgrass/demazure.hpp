#pragma once

/**
 * @file demazure.hpp
 * @brief Points of the Demazure resolution over F_q: chains
 * O^n = E_0 ⊃ E_1 ⊃ ... ⊃ E_{λ_1} with p E_i ⊂ E_{i+1} and
 * dim E_i/E_{i+1} = n_λ(i), all stored in the window [0, λ_1].
 *
 * Chains are built top-down: E_{i+1} is the preimage in E_i of a subspace of
 * E_i / p E_i ≅ F_q^n of dimension n - n_λ(i).
 */

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "wittgrass/grassmannian.hpp"
#include "wittgrass/torsion.hpp"

namespace wittgrass {

// Number of k-dimensional subspaces of F_q^n. Throws InputError if k is out
// of range and WorkBoundExceeded on uint64 overflow.
std::uint64_t gauss_binomial(int n, int k, std::int64_t q);

// Row-reduced bases of every k-dimensional subspace of F_q^n, in a fixed order.
std::vector<Matrix> subspaces(const CtxPtr& field_ctx, int n, int k);

struct FiltrationChain {
  Partition lambda;
  std::vector<LatticeCanon> chain;  // E_0, ..., E_{λ_1}

  const LatticeCanon& endpoint() const { return chain.back(); }
};

// Window size used for λ: max(λ_1, 1).
int chain_window(const Partition& lambda);

// Π_i gauss_binomial(n, n_λ(i), q).
std::uint64_t chain_count(int n, const Partition& lambda, std::int64_t q);

// Every chain, in a canonical order independent of `workers`.
std::vector<FiltrationChain> enumerate_chains(int n, const Partition& lambda, std::int64_t q, int workers = 1);

// Calls visit on every chain in canonical order (single thread).
void for_each_chain(int n, const Partition& lambda, std::int64_t q,
                    const std::function<void(const FiltrationChain&)>& visit);

// Chains ending at M (M must live in window [0, chain_window(λ)]).
std::vector<FiltrationChain> demazure_fiber(const LatticeCanon& M, const Partition& lambda, std::int64_t q);

// Checks the chain conditions; throws InputError describing the first failure.
void validate_chain(const FiltrationChain& chain, int n);

struct StratumFibers {
  // Each endpoint of this type with its fiber size, sorted by key.
  std::vector<std::pair<LatticeCanon, std::uint64_t>> points;
  // fiber size -> number of points
  std::map<std::uint64_t, std::uint64_t> histogram;

  std::uint64_t chains() const;
};

struct FiberTable {
  int n = 0;
  int c = 0;
  std::int64_t q = 0;
  Partition lambda;
  std::uint64_t total_chains = 0;
  std::map<Partition, StratumFibers, ReportOrderLess> strata;
};

// Groups every chain by the type of its endpoint.
FiberTable demazure_fibers(int n, const Partition& lambda, std::int64_t q, int workers = 1);

// a_0, ..., a_{c} for Q and λ: a_m = n_Q(0) - n_λ(0) + Σ_{i>m} (n_Q(i) - n_λ(i)).
std::vector<int> quot_thresholds(const Partition& type_q, const Partition& lambda);

// F is given by rows over the residue field in the coordinates of O^n; it is
// read as a subspace of Q/p. Requires |λ| = length(Q) and
// dim F = n_Q(0) - n_λ(0) (InputError otherwise).
bool quot_stratum_predicate(const TorsionModule& Q, const Partition& lambda, const Matrix& F);

// Type of the preimage of F under Q -> Q/p.
Partition fil1_type(const TorsionModule& Q, const Matrix& F);

// Dimension of the image of F in Q/p.
int subspace_dimension(const TorsionModule& Q, const Matrix& F);

}  // namespace wittgrass

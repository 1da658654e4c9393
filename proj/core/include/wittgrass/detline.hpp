#pragma once

/**
 * @file detline.hpp
 * @brief Graded lines over F_q and determinants of finite torsion modules.
 *
 * A graded line is a pair (scalar, degree): the coordinate of a chosen basis
 * vector against a reference basis, and an integer degree. Swapping tensor
 * factors of degrees f and g costs (-1)^{fg}.
 *
 * For a torsion module Q a chain basis is a list w_1, ..., w_L with
 * G_j = span(w_1, ..., w_j) strictly increasing and p w_j in G_{j-1}. Its
 * determinant is taken against the reference chain: the p-adic filtration
 * with Smith-adapted bases p^i f_k, deepest piece first. Graded pieces
 * p^i Q / p^{i+1} Q are tensored in ascending i.
 */

#include <utility>
#include <vector>

#include "wittgrass/torsion.hpp"

namespace wittgrass {

struct GradedLine {
  RingElem scalar;  // unit of the residue field
  int degree = 0;

  friend bool operator==(const GradedLine& a, const GradedLine& b) { return a.degree == b.degree && a.scalar == b.scalar; }
};

struct BraidResult {
  GradedLine line;
  int swap_sign = 1;
};

// Tensor product together with the sign of the symmetry isomorphism.
BraidResult tensor_braid(const GradedLine& a, const GradedLine& b);

// Line of a vector space with a change of basis: (det(change), dim).
// Throws NotAUnit if change is singular.
GradedLine det_vect(const Matrix& change);

struct ChainBasis {
  std::vector<std::vector<RingElem>> vectors;  // embedded in Q
};

// Embeds vectors given in O^n coordinates (any precision >= Q's exponent).
ChainBasis chain_from_vectors(const TorsionModule& Q, const std::vector<std::vector<RingElem>>& vectors);

// Throws InputError if the list is not a chain basis of Q.
void validate_chain_basis(const TorsionModule& Q, const ChainBasis& chain);

ChainBasis reference_chain(const TorsionModule& Q);

// Degree is length(Q); the scalar compares the chain with the reference.
GradedLine det_torsion(const TorsionModule& Q, const ChainBasis& chain);

// Ratio scalar(a) / scalar(b), computed by walking from a to b through
// elementary exchanges of adjacent steps.
RingElem compare_chains(const TorsionModule& Q, const ChainBasis& a, const ChainBasis& b);

// One chain basis per maximal flag of submodules, in a fixed order.
std::vector<ChainBasis> maximal_chains(const TorsionModule& Q);

}  // namespace wittgrass

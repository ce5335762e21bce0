#pragma once

#include <cstdint>
#include <vector>

#include "elemop/matrix.hpp"

namespace elemop {

/// A two-dimensional space of m x n matrices, spanned by an ordered
/// independent pair (B1, B2). Members are x*B1 + y*B2.
struct PencilSpace {
  PencilSpace(Matrix b1, Matrix b2);
  Matrix B1, B2;
};

/// Maximal rank over all members, computed exactly over the rational
/// function field in the pencil parameters.
std::size_t max_rank(const PencilSpace& s);

/// The chain z_1..z_t with B1 z_1 = B2 z_t = 0 and B2 z_k = B1 z_{k+1},
/// grown from a kernel vector y1 of B1 (solve forward, then close the chain
/// with the alpha-correction). Throws std::domain_error when the chain cannot
/// be continued or fails to close within n steps.
std::vector<Vec> kernel_chain(const PencilSpace& s, const Vec& y1);

/// Stacked linear system whose kernel elements are exactly the chains
/// (z_1..z_t) with b1 z_1 = 0, b2 z_j = b1 z_{j+1} and b2 z_t = 0, as one
/// (t+1)m x tn matrix. Shared with the annihilator chain solver.
Matrix chain_relation_system(const Matrix& b1, const Matrix& b2, std::size_t t);

/// Equivalence transform exhibiting the chain structure of the space:
/// Q^{-1} (x B1 + y B2) P is block diagonal with banded blocks of sizes
/// (n_i - 1) x n_i -- y on the diagonal, x on the superdiagonal -- followed
/// by an unconstrained residual block.
struct CanonicalForm {
  std::vector<std::size_t> block_sizes;  // descending
  Matrix P;  // invertible n x n (domain)
  Matrix Q;  // invertible m x m (codomain)
  std::size_t residual_rows = 0, residual_cols = 0;
  Matrix residual1, residual2;  // residual blocks of B1 and B2
  std::size_t residual_generic_rank = 0;
};

/// The banded block: (k-1) x k with y on the diagonal and x above it.
Matrix banded_block(std::size_t k, const Rational& x, const Rational& y);

/// Expected canonical shape of x*B1 + y*B2 for given block data.
Matrix canonical_member(const CanonicalForm& form, const Rational& x, const Rational& y);

/// Computes the canonical form. Preconditions (checked, reported on failure
/// via std::domain_error): no common kernel vector, the member images span
/// the codomain, and max_rank(s) = n - r with r >= 1.
CanonicalForm canonical_form(const PencilSpace& s, std::uint64_t seed = 0);

/// Exact certificate: Q^{-1}(x B1 + y B2) P matches the block pattern at the
/// given parameter pairs.
bool check_certificate(const PencilSpace& s, const CanonicalForm& form,
                       const std::vector<std::pair<Rational, Rational>>& samples);

/// Certificate at (1,0), (0,1), (1,1) and one seeded random rational pair.
bool check_certificate(const PencilSpace& s, const CanonicalForm& form,
                       std::uint64_t seed = 0);

}  // namespace elemop

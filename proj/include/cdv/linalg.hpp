#pragma once

#include <cstddef>
#include <vector>

#include "cdv/matrix.hpp"

namespace cdv {

/// Eigenvalue sign counts of a symmetric matrix.
struct Inertia {
  std::size_t neg = 0;
  std::size_t zero = 0;
  std::size_t pos = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// ---- exact ----------------------------------------------------------------

/// Rank over the rationals. Works for rectangular input.
std::size_t rank_exact(const RatMatrix& a);

/// Basis of {x : A x = 0}, one vector per free column of the reduced row
/// echelon form (that column's entry is 1, other free entries 0).
std::vector<std::vector<Rational>> nullspace_exact(const RatMatrix& a);

/// Signature by symmetric congruence elimination. Uses a nonzero diagonal
/// pivot when one remains; otherwise a 2x2 block [[0,a],[a,0]] on a nonzero
/// off-diagonal entry, which contributes one negative and one positive sign.
/// Throws Error{NotSymmetric} on asymmetric input.
Inertia inertia_exact(const RatMatrix& a);

// ---- floating point -------------------------------------------------------

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  FloatMatrix vectors;         // column j pairs with values[j]
  int sweeps = 0;
};

inline constexpr double kEighOffDiagonalTol = 1e-12;
inline constexpr int kEighMaxSweeps = 100;
inline constexpr double kDefaultRelTol = 1e-9;

/// Cyclic Jacobi. Stops once the off-diagonal Frobenius norm falls below
/// 1e-12 * ||A||_F; throws Error{NonConvergence} after 100 sweeps.
EigenDecomposition eigh(const FloatMatrix& a);

/// Number of eigenvalues with |lambda| > tol_rel * max |lambda|.
std::size_t rank_float(const FloatMatrix& a, double tol_rel = kDefaultRelTol);

/// Eigenvalue sign counts, with |lambda| <= tol_rel * max |lambda| counted as
/// zero.
Inertia inertia_float(const FloatMatrix& a, double tol_rel = kDefaultRelTol);
Inertia classify_eigenvalues(const std::vector<double>& values, double tol_rel = kDefaultRelTol);

/// Singular values, descending; min(rows, cols) of them.
std::vector<double> singular_values(const FloatMatrix& a);

}  // namespace cdv

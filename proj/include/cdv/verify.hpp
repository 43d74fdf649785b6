#pragma once

#include <cstddef>
#include <optional>

#include "cdv/graph.hpp"
#include "cdv/linalg.hpp"
#include "cdv/matrix.hpp"
#include "cdv/parametric.hpp"

namespace cdv {

struct FloatTolerances {
  double eigen_rel = 1e-9;      // |lambda| <= eigen_rel * max|lambda| is zero
  double sign_abs = 1e-12;      // off-diagonal entries within this are zero
  double singular_rel = 1e-9;   // SAP singular-value cutoff
};

enum class VerifyMode { Exact, Float };

struct SpectralBounds {
  double negative_eigenvalue = 0.0;
  double negative_bound = 0.0;       // -k alpha + i
  std::optional<double> min_positive;  // none when M has no positive eigenvalue
  double positive_bound = 0.0;       // 1 / beta_1 (0 when m = 0)
  double tolerance = 0.0;            // 1e-9 ||M||_F
  bool negative_ok = false;
  bool positive_ok = false;

  bool ok() const { return negative_ok && positive_ok; }
  /// -k alpha + i - lambda_neg; positive when the bound holds strictly.
  double negative_margin() const { return negative_bound - negative_eigenvalue; }
};

struct CdvCertificate {
  bool m1_ok = false;
  bool m2_ok = false;
  bool m3_ok = false;
  Inertia inertia;
  std::size_t corank = 0;
  std::size_t sap_kernel_dim = 0;
  std::optional<SpectralBounds> bounds;
  VerifyMode mode = VerifyMode::Exact;
  FloatTolerances tolerances;

  bool all_ok() const { return m1_ok && m2_ok && m3_ok && (!bounds || bounds->ok()); }
};

/// Off-diagonal entries negative on edges and zero elsewhere; the diagonal is
/// free. Throws Error{DimensionMismatch}.
bool check_sign_pattern(const RatMatrix& m, const Adjacency& g);
bool check_sign_pattern(const FloatMatrix& m, const Adjacency& g, double abs_tol = 1e-12);

/// Dimension of the space of symmetric X with zero diagonal, zeros on edges
/// and M X = 0. Zero means the Strong Arnold Property holds.
///
/// Since M X = 0 forces X = K Z K^T for a kernel basis K of M and symmetric Z,
/// the system is solved in the d(d+1)/2 entries of Z against the constraints
/// (K Z K^T)_uv = 0 for u = v and for every edge uv.
std::size_t check_strong_arnold(const RatMatrix& m, const Adjacency& g);
std::size_t check_strong_arnold(const FloatMatrix& m, const Adjacency& g, const FloatTolerances& tol = {});

/// The same dimension from the unreduced system: one unknown X_uv per
/// non-adjacent pair u < v, one equation per entry of M X. Quadratic in the
/// number of non-edges; meant for cross-checks on small graphs.
std::size_t strong_arnold_direct(const RatMatrix& m, const Adjacency& g);
std::size_t strong_arnold_unknowns(const Adjacency& g);

/// Eigenvalue bounds of the block construction: the negative eigenvalue lies
/// below -k alpha + i and every positive eigenvalue is at least 1/beta_1.
/// Both comparisons allow 1e-9 ||M||_F of floating-point slack. Throws
/// Error{Numeric} unless M has exactly one negative eigenvalue.
SpectralBounds check_spectral_bounds(const RatMatrix& m, const BlockSequence& b, const AlphaParams& params);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Exact;
  FloatTolerances tolerances;
  /// When set, the spectral bounds are checked too (rational input only).
  std::optional<std::pair<BlockSequence, AlphaParams>> bounds;
};

/// Rational input honours options.mode; float input is always checked in
/// float mode. `g` must be in the same vertex order as the matrix.
CdvCertificate verify(const RatMatrix& m, const Adjacency& g, const VerifyOptions& options = {});
CdvCertificate verify(const FloatMatrix& m, const Adjacency& g, const FloatTolerances& tol = {});

}  // namespace cdv

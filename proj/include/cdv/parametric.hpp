#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdv/matrix.hpp"
#include "cdv/rational.hpp"
#include "cdv/sequence.hpp"

namespace cdv {

/// Parameters of the block construction for a block sequence with m isolate
/// blocks. alpha[j-1] holds alpha_j for j = 1 .. 2m+1; beta[j-1] holds beta_j
/// for j = 1 .. m.
///
///   beta_j            = k_{m+1} + k_m + ... + k_{j+1}
///   alpha_{m+1+j}     = 1 / beta_j
///   alpha_j (2..m+1)  = alpha_1 + i_m alpha_{2m+1} + ... + i_{m+2-j} alpha_{2m+3-j}
struct AlphaParams {
  std::vector<Rational> alpha;
  std::vector<long> beta;

  const Rational& alpha1() const { return alpha.front(); }
  /// alpha_{m+1}, the largest cone parameter.
  const Rational& aggregate() const { return alpha[beta.size()]; }
  std::size_t m() const { return beta.size(); }
};

/// Throws Error{InvalidArgument} unless alpha1 > 0.
AlphaParams alphas(const BlockSequence& b, const Rational& alpha1);

/// i + 1, comfortably past every positivity condition the construction needs.
Rational default_alpha1(const BlockSequence& b);

/// Lays out the row blocks for arbitrary parameters (no consistency checks
/// beyond sizes). Vertex order is cone blocks newest first, then isolate
/// blocks oldest first, which coincides with build_graph()'s degree order.
///
/// Writing cone block position l = 1..m+1 (block k_{m+2-l}) and isolate block
/// p = 1..m (block i_p):
///   cone l, cone l'   -> -alpha_{max(l,l')}
///   cone l, isolate p -> -alpha_{m+1+p} if p <= m+1-l, else 0
///   isolate p, itself -> +alpha_{m+1+p} on the diagonal, 0 elsewhere
RatMatrix assemble_parametric(const BlockSequence& b, const AlphaParams& params);

struct ParametricResult {
  RatMatrix matrix;
  AlphaParams params;
  /// Case 3 sequences get a valid CdV matrix of corank c - 1 < mu.
  bool non_optimal = false;
};

/// Builds the matrix with alpha1 (default: default_alpha1) and certifies the
/// single negative eigenvalue exactly; throws Error{AlphaTooSmall} otherwise.
ParametricResult construct_parametric(const BlockSequence& b, std::optional<Rational> alpha1 = std::nullopt);

/// Entry c0 + c1 * a of the family, a standing for alpha1.
struct AffineEntry {
  Rational constant;
  Rational coefficient;

  /// "a+53/20", "-a-2", "1/5", "0", ...
  std::string to_string() const;
  friend bool operator==(const AffineEntry&, const AffineEntry&) = default;
};

Matrix<AffineEntry> symbolic_parametric(const BlockSequence& b);

/// True iff for each 2 <= j <= m+1 every row of cone block R_j equals
/// r_1 + R_{2m+1} + ... + R_{2m+3-j} (row blocks summed), exactly.
bool check_row_dependencies(const RatMatrix& m, const BlockSequence& b);

/// 1 + sum_j i_j.
std::size_t expected_rank(const BlockSequence& b);

}  // namespace cdv

#include "cdv/parametric.hpp"

#include <algorithm>
#include <numeric>

#include "cdv/error.hpp"
#include "cdv/linalg.hpp"

namespace cdv {
namespace {

AlphaParams alphas_unchecked(const BlockSequence& b, const Rational& alpha1) {
  validate(b);
  const std::size_t m = b.m();
  AlphaParams p;
  p.beta.resize(m);
  for (std::size_t j = 1; j <= m; ++j)
    p.beta[j - 1] = std::accumulate(b.cones.begin() + static_cast<long>(j), b.cones.end(), 0L);

  p.alpha.assign(2 * m + 1, Rational(0));
  auto alpha = [&](std::size_t j) -> Rational& { return p.alpha[j - 1]; };
  alpha(1) = alpha1;
  for (std::size_t j = 1; j <= m; ++j) alpha(m + 1 + j) = Rational(1, p.beta[j - 1]);
  for (std::size_t j = 2; j <= m + 1; ++j)
    alpha(j) = alpha(j - 1) + b.isolates[m + 1 - j] * alpha(2 * m + 3 - j);
  return p;
}

// Block layout shared by the numeric and symbolic builders.
struct Layout {
  std::vector<std::size_t> cone_pos;     // per row: cone block position l (1-based) or 0
  std::vector<std::size_t> isolate_blk;  // per row: isolate block p (1-based) or 0
};

Layout layout(const BlockSequence& b) {
  const std::size_t m = b.m();
  Layout out;
  for (std::size_t l = 1; l <= m + 1; ++l)
    for (int r = 0; r < b.cones[m + 1 - l]; ++r) {
      out.cone_pos.push_back(l);
      out.isolate_blk.push_back(0);
    }
  for (std::size_t p = 1; p <= m; ++p)
    for (int r = 0; r < b.isolates[p - 1]; ++r) {
      out.cone_pos.push_back(0);
      out.isolate_blk.push_back(p);
    }
  return out;
}

template <typename T, typename Neg>
Matrix<T> assemble(const BlockSequence& b, const std::vector<T>& alpha, Neg negate) {
  const std::size_t m = b.m();
  if (alpha.size() != 2 * m + 1)
    throw Error(ErrorCode::DimensionMismatch, "parameter count does not match block sequence");
  const Layout lay = layout(b);
  const std::size_t n = lay.cone_pos.size();
  Matrix<T> out(n, n);
  auto a = [&](std::size_t j) -> const T& { return alpha[j - 1]; };
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t lu = lay.cone_pos[u], lv = lay.cone_pos[v];
      const std::size_t pu = lay.isolate_blk[u], pv = lay.isolate_blk[v];
      if (lu && lv) {
        out(u, v) = negate(a(std::max(lu, lv)));
      } else if (lu && pv) {
        if (pv <= m + 1 - lu) out(u, v) = negate(a(m + 1 + pv));
      } else if (pu && lv) {
        if (pu <= m + 1 - lv) out(u, v) = negate(a(m + 1 + pu));
      } else if (u == v) {
        out(u, v) = a(m + 1 + pu);
      }
    }
  return out;
}

// Sum of the rows of isolate block p.
std::vector<Rational> isolate_block_sum(const RatMatrix& mat, const Layout& lay, std::size_t p) {
  std::vector<Rational> sum(mat.cols(), Rational(0));
  for (std::size_t r = 0; r < mat.rows(); ++r)
    if (lay.isolate_blk[r] == p)
      for (std::size_t c = 0; c < mat.cols(); ++c) sum[c] += mat(r, c);
  return sum;
}

}  // namespace

AlphaParams alphas(const BlockSequence& b, const Rational& alpha1) {
  if (alpha1 <= 0) throw Error(ErrorCode::InvalidArgument, "alpha1 must be positive");
  return alphas_unchecked(b, alpha1);
}

Rational default_alpha1(const BlockSequence& b) {
  const long i = std::accumulate(b.isolates.begin(), b.isolates.end(), 0L);
  return Rational(i + 1);
}

RatMatrix assemble_parametric(const BlockSequence& b, const AlphaParams& params) {
  validate(b);
  return assemble<Rational>(b, params.alpha, [](const Rational& x) { return Rational(-x); });
}

ParametricResult construct_parametric(const BlockSequence& b, std::optional<Rational> alpha1) {
  validate(b);
  ParametricResult out;
  out.params = alphas(b, alpha1.value_or(default_alpha1(b)));
  out.matrix = assemble_parametric(b, out.params);
  out.non_optimal = classify(from_blocks(b)) == CaseLabel::Case3;
  if (inertia_exact(out.matrix).neg != 1)
    throw Error(ErrorCode::AlphaTooSmall,
                "alpha1 too small: matrix does not have exactly one negative eigenvalue for alpha1 = " +
                    to_string(out.params.alpha1()));
  return out;
}

std::string AffineEntry::to_string() const {
  std::string out;
  if (coefficient != 0) {
    if (coefficient == -1) out = "-";
    else if (coefficient != 1) out = cdv::to_string(coefficient) + "*";
    out += "a";
  }
  if (constant != 0 || out.empty()) {
    if (!out.empty() && constant > 0) out += "+";
    out += cdv::to_string(constant);
  }
  return out;
}

Matrix<AffineEntry> symbolic_parametric(const BlockSequence& b) {
  // alpha_j is affine in alpha1 with slope 1 for j <= m+1 and slope 0 beyond.
  const AlphaParams base = alphas_unchecked(b, Rational(0));
  std::vector<AffineEntry> alpha;
  for (std::size_t j = 0; j < base.alpha.size(); ++j)
    alpha.push_back({base.alpha[j], Rational(j <= b.m() ? 1 : 0)});
  return assemble<AffineEntry>(b, alpha, [](const AffineEntry& x) {
    return AffineEntry{-x.constant, -x.coefficient};
  });
}

bool check_row_dependencies(const RatMatrix& mat, const BlockSequence& b) {
  validate(b);
  const Layout lay = layout(b);
  if (!mat.square() || mat.rows() != lay.cone_pos.size())
    throw Error(ErrorCode::DimensionMismatch, "check_row_dependencies: matrix size does not match blocks");
  const std::size_t m = b.m();

  std::vector<Rational> target(mat.cols());
  for (std::size_t c = 0; c < mat.cols(); ++c) target[c] = mat(0, c);  // r_1

  for (std::size_t j = 2; j <= m + 1; ++j) {
    // add R_{2m+3-j}, i.e. isolate block p = m+2-j
    const auto add = isolate_block_sum(mat, lay, m + 2 - j);
    for (std::size_t c = 0; c < mat.cols(); ++c) target[c] += add[c];
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      if (lay.cone_pos[r] != j) continue;
      for (std::size_t c = 0; c < mat.cols(); ++c)
        if (mat(r, c) != target[c]) return false;
    }
  }
  return true;
}

std::size_t expected_rank(const BlockSequence& b) {
  return 1 + static_cast<std::size_t>(std::accumulate(b.isolates.begin(), b.isolates.end(), 0L));
}

}  // namespace cdv

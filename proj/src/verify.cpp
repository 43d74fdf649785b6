#include "cdv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cdv/error.hpp"

namespace cdv {
namespace {

void require_match(std::size_t rows, std::size_t cols, const Adjacency& g) {
  if (rows != cols || rows != g.size())
    throw Error(ErrorCode::DimensionMismatch, "matrix size does not match the graph");
}

// Constrained positions of X: the diagonal and every edge.
std::vector<std::pair<std::size_t, std::size_t>> constrained_entries(const Adjacency& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u; v < g.size(); ++v)
      if (u == v || g(u, v)) out.emplace_back(u, v);
  return out;
}

template <typename T, typename Kernel>
Matrix<T> reduced_system(const Adjacency& g, const Kernel& kernel, std::size_t d, T off_scale, T edge_scale) {
  const auto entries = constrained_entries(g);
  const std::size_t unknowns = d * (d + 1) / 2;
  Matrix<T> sys(entries.size(), unknowns);
  for (std::size_t row = 0; row < entries.size(); ++row) {
    const auto [u, v] = entries[row];
    const T scale = u == v ? T(1) : edge_scale;
    std::size_t col = 0;
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = p; q < d; ++q, ++col) {
        if (p == q)
          sys(row, col) = scale * kernel(u, p) * kernel(v, p);
        else
          sys(row, col) = scale * off_scale * (kernel(u, p) * kernel(v, q) + kernel(u, q) * kernel(v, p));
      }
  }
  return sys;
}

}  // namespace

bool check_sign_pattern(const RatMatrix& m, const Adjacency& g) {
  require_match(m.rows(), m.cols(), g);
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (u == v) continue;
      if (g(u, v) ? !(m(u, v) < 0) : m(u, v) != 0) return false;
    }
  return true;
}

bool check_sign_pattern(const FloatMatrix& m, const Adjacency& g, double abs_tol) {
  require_match(m.rows(), m.cols(), g);
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (u == v) continue;
      if (g(u, v) ? !(m(u, v) < -abs_tol) : std::abs(m(u, v)) > abs_tol) return false;
    }
  return true;
}

std::size_t check_strong_arnold(const RatMatrix& m, const Adjacency& g) {
  require_match(m.rows(), m.cols(), g);
  const auto basis = nullspace_exact(m);
  const std::size_t d = basis.size();
  if (d == 0) return 0;
  auto kernel = [&](std::size_t row, std::size_t vec) -> const Rational& { return basis[vec][row]; };
  const RatMatrix sys = reduced_system<Rational>(g, kernel, d, Rational(1), Rational(1));
  return sys.cols() - rank_exact(sys);
}

std::size_t check_strong_arnold(const FloatMatrix& m, const Adjacency& g, const FloatTolerances& tol) {
  require_match(m.rows(), m.cols(), g);
  const EigenDecomposition eig = eigh(m);
  double scale = 0.0;
  for (double x : eig.values) scale = std::max(scale, std::abs(x));
  std::vector<std::size_t> null_cols;
  for (std::size_t j = 0; j < eig.values.size(); ++j)
    if (std::abs(eig.values[j]) <= tol.eigen_rel * scale) null_cols.push_back(j);
  const std::size_t d = null_cols.size();
  if (d == 0) return 0;

  // With an orthonormal kernel basis and these scalings the map from Z to the
  // constrained entries of X is a restriction of an isometry.
  auto kernel = [&](std::size_t row, std::size_t vec) { return eig.vectors(row, null_cols[vec]); };
  FloatMatrix sys = reduced_system<double>(g, kernel, d, 1.0 / std::sqrt(2.0), std::sqrt(2.0));
  if (sys.rows() < sys.cols()) sys = transpose(sys);
  const auto sv = singular_values(sys);
  const double top = sv.empty() ? 0.0 : sv.front();
  const auto rank = static_cast<std::size_t>(
      std::count_if(sv.begin(), sv.end(), [&](double s) { return top > 0.0 && s > tol.singular_rel * top; }));
  return d * (d + 1) / 2 - rank;
}

std::size_t strong_arnold_unknowns(const Adjacency& g) {
  const std::size_t n = g.size();
  return n * (n - 1) / 2 - g.edge_count();
}

std::size_t strong_arnold_direct(const RatMatrix& m, const Adjacency& g) {
  require_match(m.rows(), m.cols(), g);
  const std::size_t n = g.size();
  std::vector<std::vector<long>> index(n, std::vector<long>(n, -1));
  long unknowns = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!g(u, v)) index[u][v] = index[v][u] = unknowns++;
  if (unknowns == 0) return 0;

  RatMatrix sys(n * n, static_cast<std::size_t>(unknowns));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t u = 0; u < n; ++u)
        if (index[u][b] >= 0) sys(a * n + b, static_cast<std::size_t>(index[u][b])) += m(a, u);
  return sys.cols() - rank_exact(sys);
}

SpectralBounds check_spectral_bounds(const RatMatrix& m, const BlockSequence& b, const AlphaParams& params) {
  validate(b);
  if (params.m() != b.m()) throw Error(ErrorCode::DimensionMismatch, "parameters do not match block sequence");
  const FloatMatrix f = to_float(m);
  const EigenDecomposition eig = eigh(f);
  const Inertia in = classify_eigenvalues(eig.values);
  if (in.neg != 1)
    throw Error(ErrorCode::Numeric, "spectral bounds need exactly one negative eigenvalue");

  const long k = std::accumulate(b.cones.begin(), b.cones.end(), 0L);
  const long i = std::accumulate(b.isolates.begin(), b.isolates.end(), 0L);

  SpectralBounds out;
  out.tolerance = 1e-9 * frobenius_norm(f);
  out.negative_eigenvalue = eig.values.front();
  out.negative_bound = to_double(-k * params.aggregate() + i);
  out.negative_ok = out.negative_eigenvalue < out.negative_bound + out.tolerance;

  out.positive_bound = params.beta.empty() ? 0.0 : 1.0 / static_cast<double>(params.beta.front());
  out.positive_ok = true;
  double scale = 0.0;
  for (double x : eig.values) scale = std::max(scale, std::abs(x));
  for (double x : eig.values) {
    if (x <= kDefaultRelTol * scale) continue;
    if (!out.min_positive || x < *out.min_positive) out.min_positive = x;
    if (x < out.positive_bound - out.tolerance) out.positive_ok = false;
  }
  return out;
}

CdvCertificate verify(const RatMatrix& m, const Adjacency& g, const VerifyOptions& options) {
  require_match(m.rows(), m.cols(), g);
  CdvCertificate cert;
  if (options.mode == VerifyMode::Float) {
    cert = verify(to_float(m), g, options.tolerances);
  } else {
    cert.mode = VerifyMode::Exact;
    cert.m1_ok = check_sign_pattern(m, g);
    cert.inertia = inertia_exact(m);
    cert.corank = cert.inertia.zero;
    cert.m2_ok = cert.inertia.neg == 1;
    cert.sap_kernel_dim = check_strong_arnold(m, g);
    cert.m3_ok = cert.sap_kernel_dim == 0;
  }
  if (options.bounds) {
    if (cert.m2_ok)
      cert.bounds = check_spectral_bounds(m, options.bounds->first, options.bounds->second);
    else
      cert.bounds = SpectralBounds{};  // not meaningful without a unique negative eigenvalue
  }
  return cert;
}

CdvCertificate verify(const FloatMatrix& m, const Adjacency& g, const FloatTolerances& tol) {
  require_match(m.rows(), m.cols(), g);
  CdvCertificate cert;
  cert.mode = VerifyMode::Float;
  cert.tolerances = tol;
  cert.m1_ok = check_sign_pattern(m, g, tol.sign_abs);
  cert.inertia = classify_eigenvalues(eigh(m).values, tol.eigen_rel);
  cert.corank = cert.inertia.zero;
  cert.m2_ok = cert.inertia.neg == 1;
  cert.sap_kernel_dim = check_strong_arnold(m, g, tol);
  cert.m3_ok = cert.sap_kernel_dim == 0;
  return cert;
}

}  // namespace cdv

#include "cdv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/SVD>

namespace cdv {
namespace {

// Gauss-Jordan on `a` in place. With `full` set, entries above each pivot are
// cleared as well and pivots are scaled to 1 (reduced row echelon form).
std::vector<std::size_t> eliminate(RatMatrix& a, bool full) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));

    if (full) {
      const Rational inv = 1 / a(r, c);
      for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    }
    for (std::size_t i = full ? 0 : r + 1; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = full ? Rational(a(i, c)) : Rational(a(i, c) / a(r, c));
      for (std::size_t j = c; j < cols; ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

double sign_or_one(double x) { return x < 0.0 ? -1.0 : 1.0; }

// Root of t^2 + 2 theta t - 1 = 0 with the smaller magnitude.
double rotation_tangent(double theta) {
  if (std::abs(theta) > 1e150) return 1.0 / (2.0 * theta);
  return sign_or_one(theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
}

}  // namespace

std::size_t rank_exact(const RatMatrix& a) {
  RatMatrix work = a;
  return eliminate(work, false).size();
}

std::vector<std::vector<Rational>> nullspace_exact(const RatMatrix& a) {
  RatMatrix work = a;
  const auto pivots = eliminate(work, true);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Inertia inertia_exact(const RatMatrix& a) {
  if (!a.is_symmetric())
    throw Error(ErrorCode::NotSymmetric, "inertia_exact: matrix is not symmetric");

  RatMatrix w = a;
  std::vector<std::size_t> alive(a.rows());
  std::iota(alive.begin(), alive.end(), 0);
  Inertia out;

  auto drop = [&](std::size_t idx) { alive.erase(std::find(alive.begin(), alive.end(), idx)); };

  while (!alive.empty()) {
    auto diag = std::find_if(alive.begin(), alive.end(), [&](std::size_t i) { return w(i, i) != 0; });
    if (diag != alive.end()) {
      const std::size_t i = *diag;
      const Rational pivot = w(i, i);
      (pivot < 0 ? out.neg : out.pos) += 1;
      drop(i);
      for (std::size_t r : alive) {
        if (w(r, i) == 0) continue;
        const Rational f = w(r, i) / pivot;
        for (std::size_t s : alive)
          if (s >= r && w(i, s) != 0) w(r, s) -= f * w(i, s);
      }
      for (std::size_t r : alive)
        for (std::size_t s : alive)
          if (s < r) w(r, s) = w(s, r);
      continue;
    }

    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t x = 0; x < alive.size() && !found; ++x)
      for (std::size_t y = x + 1; y < alive.size(); ++y)
        if (w(alive[x], alive[y]) != 0) {
          pi = alive[x];
          pj = alive[y];
          found = true;
          break;
        }
    if (!found) {
      out.zero += alive.size();
      break;
    }

    // Hyperbolic pair: block [[0,h],[h,0]] has inverse [[0,1/h],[1/h,0]].
    const Rational h = w(pi, pj);
    out.neg += 1;
    out.pos += 1;
    drop(pi);
    drop(pj);
    for (std::size_t r : alive) {
      const Rational ri = w(r, pi) / h;
      const Rational rj = w(r, pj) / h;
      if (ri == 0 && rj == 0) continue;
      for (std::size_t s : alive) {
        if (s < r) continue;
        w(r, s) -= ri * w(pj, s) + rj * w(pi, s);
      }
    }
    for (std::size_t r : alive)
      for (std::size_t s : alive)
        if (s < r) w(r, s) = w(s, r);
  }
  return out;
}

EigenDecomposition eigh(const FloatMatrix& input) {
  if (!input.square())
    throw Error(ErrorCode::DimensionMismatch, "eigh: matrix is not square");
  const std::size_t n = input.rows();
  const double norm = frobenius_norm(input);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(input(i, j)))
        throw Error(ErrorCode::InvalidArgument, "eigh: non-finite entry");
      if (std::abs(input(i, j) - input(j, i)) > 1e-12 * norm)
        throw Error(ErrorCode::NotSymmetric, "eigh: matrix is not symmetric");
    }

  FloatMatrix a = input;
  FloatMatrix v = FloatMatrix::identity(n);
  EigenDecomposition out;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > kEighOffDiagonalTol * norm) {
    if (sweep == kEighMaxSweeps)
      throw Error(ErrorCode::NonConvergence, "eigh: Jacobi iteration did not converge");
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double t = rotation_tangent((a(q, q) - a(p, p)) / (2.0 * a(p, q)));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  out.values.resize(n);
  out.vectors = FloatMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  out.sweeps = sweep;
  return out;
}

Inertia classify_eigenvalues(const std::vector<double>& values, double tol_rel) {
  double scale = 0.0;
  for (double x : values) scale = std::max(scale, std::abs(x));
  const double cutoff = tol_rel * scale;
  Inertia out;
  for (double x : values) {
    if (std::abs(x) <= cutoff) ++out.zero;
    else if (x < 0) ++out.neg;
    else ++out.pos;
  }
  return out;
}

Inertia inertia_float(const FloatMatrix& a, double tol_rel) {
  return classify_eigenvalues(eigh(a).values, tol_rel);
}

std::size_t rank_float(const FloatMatrix& a, double tol_rel) {
  const Inertia in = inertia_float(a, tol_rel);
  return in.neg + in.pos;
}

std::vector<double> singular_values(const FloatMatrix& input) {
  const auto rows = static_cast<Eigen::Index>(input.rows());
  const auto cols = static_cast<Eigen::Index>(input.cols());
  Eigen::MatrixXd a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      a(i, j) = input(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& values = svd.singularValues();
  return {values.data(), values.data() + values.size()};
}

}  // namespace cdv

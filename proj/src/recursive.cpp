#include "cdv/recursive.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cdv/error.hpp"
#include "cdv/linalg.hpp"

namespace cdv {

namespace {
constexpr double kSignFloor = 1e-10;
}

FloatMatrix star_matrix(int q) {
  if (q < 1) throw Error(ErrorCode::InvalidArgument, "star_matrix: q must be at least 1");
  const auto n = static_cast<std::size_t>(q) + 1;
  FloatMatrix m(n, n);
  if (q == 1) {
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = -1.0;
    return m;
  }
  for (std::size_t leaf = 1; leaf < n; ++leaf) m(0, leaf) = m(leaf, 0) = -1.0;
  if (q >= 4)
    for (std::size_t leaf = 1; leaf <= static_cast<std::size_t>(q - 3); ++leaf) m(leaf, leaf) = 1.0;
  return m;
}

SuspensionState add_isolate(SuspensionState state, int label) {
  const std::size_t n = state.matrix.rows();
  FloatMatrix grown(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) grown(i, j) = state.matrix(i, j);
  grown(n, n) = 1.0;
  state.matrix = std::move(grown);
  state.isolates += 1;
  state.labels.push_back(label);
  return state;
}

SuspensionState add_cone(SuspensionState state, int label, ConeStepReport* report) {
  const std::size_t k = state.component;
  const std::size_t p = state.isolates;
  const std::size_t n = k + p + 1;

  FloatMatrix block(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) block(i, j) = state.matrix(i, j);
  const EigenDecomposition eig = eigh(block);
  const Inertia in = classify_eigenvalues(eig.values);
  if (in.neg != 1)
    throw Error(ErrorCode::Numeric, "add_cone: component block does not have exactly one negative eigenvalue");
  const double lambda1 = eig.values.front();

  std::vector<double> z(k);
  for (std::size_t i = 0; i < k; ++i) z[i] = eig.vectors(i, 0);
  const double len = std::sqrt(std::inner_product(z.begin(), z.end(), z.begin(), 0.0));
  const double flip = *std::max_element(z.begin(), z.end()) > 0.0 ? -1.0 : 1.0;
  for (double& x : z) x *= flip / len;
  if (std::any_of(z.begin(), z.end(), [](double x) { return x > -kSignFloor; }))
    throw Error(ErrorCode::Numeric, "add_cone: negative eigenvector is not strictly signed");

  const double theta = std::sqrt(1.0 - static_cast<double>(p) * lambda1);

  FloatMatrix grown(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) grown(i, j) = state.matrix(i, j);
  const std::size_t last = n - 1;
  for (std::size_t i = 0; i < k; ++i) grown(i, last) = grown(last, i) = theta * z[i];
  for (std::size_t i = k; i < last; ++i) grown(i, last) = grown(last, i) = -1.0;
  grown(last, last) = 1.0 / lambda1;

  if (report) {
    std::vector<double> w(n);
    for (std::size_t i = 0; i < k; ++i) w[i] = theta * z[i];
    for (std::size_t i = k; i < n; ++i) w[i] = -lambda1;
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += grown(i, j) * w[j];
      res += acc * acc;
    }
    report->lambda1 = lambda1;
    report->theta = theta;
    report->witness_residual = std::sqrt(res) / frobenius_norm(grown);
  }

  state.matrix = std::move(grown);
  state.component = n;
  state.isolates = 0;
  state.labels.push_back(label);
  return state;
}

RecursiveResult construct_recursive(const BuildSequence& seq) {
  if (!seq.connected())
    throw Error(ErrorCode::NotConnected, "sequence '" + seq.to_string() + "' is not connected");
  if (seq.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "recursive construction needs at least two vertices");

  std::size_t second = 1;
  while (seq[second] != Step::Cone) ++second;

  // After step `second` the graph is a star whose center is the second cone
  // and whose leaves are all earlier vertices.
  SuspensionState state;
  state.matrix = star_matrix(static_cast<int>(second));
  state.component = second + 1;
  state.labels.push_back(static_cast<int>(second));
  for (std::size_t v = 0; v < second; ++v) state.labels.push_back(static_cast<int>(v));

  RecursiveResult out;
  for (std::size_t s = second + 1; s < seq.size(); ++s) {
    if (seq[s] == Step::Isolate) {
      state = add_isolate(std::move(state), static_cast<int>(s));
    } else {
      ConeStepReport report;
      state = add_cone(std::move(state), static_cast<int>(s), &report);
      out.cone_steps.push_back(report);
    }
  }

  // labels[i] is the construction index of row i; invert it.
  std::vector<int> order(seq.size());
  for (std::size_t i = 0; i < state.labels.size(); ++i)
    order[static_cast<std::size_t>(state.labels[i])] = static_cast<int>(i);
  out.matrix = permute_symmetric(state.matrix, order);
  out.expected_corank = mu(seq);
  return out;
}

FloatMatrix to_degree_order(const FloatMatrix& construction_order, const ThresholdGraph& g) {
  return permute_symmetric(construction_order, g.order);
}

}  // namespace cdv

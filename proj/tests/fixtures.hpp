#pragma once

// Worked examples from the literature plus brute-force oracles shared by the
// unit and acceptance tests. Nothing here calls into the code under test
// except to build inputs.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cdv/graph.hpp"
#include "cdv/matrix.hpp"
#include "cdv/rational.hpp"
#include "cdv/sequence.hpp"

namespace fixtures {

using cdv::Rational;

// c,i,c,c,i,c,c ; blocks 1,1,2,1,2
inline const std::string kSevenVertex = "c i c c i c c";
// blocks 2,2,1,1,3,2,1
inline const std::string kTwelveVertex = "2,2,1,1,3,2,1";

inline cdv::IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows) {
  cdv::IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline cdv::IntMatrix seven_laplacian() {
  return int_matrix({
      {6, -1, -1, -1, -1, -1, -1},
      {-1, 6, -1, -1, -1, -1, -1},
      {-1, -1, 5, -1, -1, -1, 0},
      {-1, -1, -1, 5, -1, -1, 0},
      {-1, -1, -1, -1, 4, 0, 0},
      {-1, -1, -1, -1, 0, 4, 0},
      {-1, -1, 0, 0, 0, 0, 2},
  });
}

inline cdv::IntMatrix twelve_laplacian() {
  return int_matrix({
      {11, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1},
      {-1, 9, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0},
      {-1, -1, 9, -1, -1, -1, -1, -1, -1, -1, 0, 0},
      {-1, -1, -1, 9, -1, -1, -1, -1, -1, -1, 0, 0},
      {-1, -1, -1, -1, 8, -1, -1, -1, -1, 0, 0, 0},
      {-1, -1, -1, -1, -1, 6, -1, 0, 0, 0, 0, 0},
      {-1, -1, -1, -1, -1, -1, 6, 0, 0, 0, 0, 0},
      {-1, -1, -1, -1, -1, 0, 0, 5, 0, 0, 0, 0},
      {-1, -1, -1, -1, -1, 0, 0, 0, 5, 0, 0, 0},
      {-1, -1, -1, -1, 0, 0, 0, 0, 0, 4, 0, 0},
      {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
      {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
  });
}

// Reference 12x12 parametric example, transcribed symbol by symbol; the matrix
// is minus this table with b = a+2, c = a+9/4, d = a+53/20.
inline cdv::RatMatrix twelve_parametric(const Rational& a) {
  const Rational b = a + 2, c = a + Rational(9, 4), d = a + Rational(53, 20);
  const Rational f = Rational(1, 5), q = Rational(1, 4), one(1), z(0);
  const std::vector<std::vector<Rational>> table = {
      {a, b, b, b, c, d, d, f, f, q, one, one},
      {b, b, b, b, c, d, d, f, f, q, z, z},
      {b, b, b, b, c, d, d, f, f, q, z, z},
      {b, b, b, b, c, d, d, f, f, q, z, z},
      {c, c, c, c, c, d, d, f, f, z, z, z},
      {d, d, d, d, d, d, d, z, z, z, z, z},
      {d, d, d, d, d, d, d, z, z, z, z, z},
      {f, f, f, f, f, z, z, -f, z, z, z, z},
      {f, f, f, f, f, z, z, z, -f, z, z, z},
      {q, q, q, q, z, z, z, z, z, -q, z, z},
      {one, z, z, z, z, z, z, z, z, z, -one, z},
      {one, z, z, z, z, z, z, z, z, z, z, -one},
  };
  cdv::RatMatrix m(12, 12);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) m(i, j) = -table[i][j];
  return m;
}

// Reference 7x7 parametric example with its b left free (the table reads b = a + 1/4,
// c = a + 3/4).
inline cdv::RatMatrix seven_parametric(const Rational& a, const Rational& b, const Rational& c) {
  const Rational q = Rational(1, 4), h = Rational(1, 2), z(0);
  const std::vector<std::vector<Rational>> m = {
      {-a, -a, -b, -b, -c, -q, -h},
      {-a, -a, -b, -b, -c, -q, -h},
      {-b, -b, -b, -b, -c, -q, z},
      {-b, -b, -b, -b, -c, -q, z},
      {-c, -c, -c, -c, -c, z, z},
      {-q, -q, -q, -q, z, q, z},
      {-h, -h, z, z, z, z, h},
  };
  cdv::RatMatrix out(7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) out(i, j) = m[i][j];
  return out;
}

// Reference 7x7 matrix of the recursive construction, rounded to 3 significant digits.
inline cdv::FloatMatrix seven_recursive_rounded() {
  const std::vector<std::vector<double>> m = {
      {-0.471, -0.555, -1.02, -1.02, -0.721, -0.721, -1},
      {-0.555, -0.302, -0.474, -0.474, -0.335, -0.335, -0.129},
      {-1.02, -0.474, 0, -0.707, -1, -1, 0},
      {-1.02, -0.474, -0.707, -0.707, -0.5, -0.5, 0},
      {-0.721, -0.335, -1, -0.5, 0, 0, 0},
      {-0.721, -0.335, -1, -0.5, 0, 0, 0},
      {-1, -0.129, 0, 0, 0, 0, 1},
  };
  cdv::FloatMatrix out(7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) out(i, j) = m[i][j];
  return out;
}

// ---- generators -----------------------------------------------------------

/// Every connected sequence on n vertices (first and last steps are cones).
inline std::vector<cdv::BuildSequence> all_connected(std::size_t n) {
  std::vector<cdv::BuildSequence> out;
  if (n == 1) {
    out.emplace_back(std::vector<cdv::Step>{cdv::Step::Cone});
    return out;
  }
  const std::size_t inner = n - 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner); ++mask) {
    std::vector<cdv::Step> steps{cdv::Step::Cone};
    for (std::size_t b = 0; b < inner; ++b)
      steps.push_back((mask >> b) & 1 ? cdv::Step::Isolate : cdv::Step::Cone);
    steps.push_back(cdv::Step::Cone);
    out.emplace_back(std::move(steps));
  }
  return out;
}

inline cdv::BuildSequence random_connected(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> len(min_n, max_n);
  std::bernoulli_distribution coin(0.5);
  const std::size_t n = len(rng);
  std::vector<cdv::Step> steps{cdv::Step::Cone};
  for (std::size_t j = 1; j + 1 < n; ++j) steps.push_back(coin(rng) ? cdv::Step::Isolate : cdv::Step::Cone);
  if (n > 1) steps.push_back(cdv::Step::Cone);
  return cdv::BuildSequence(std::move(steps));
}

/// m uniform in [0, max_m], every block entry uniform in [1, max_entry].
inline cdv::BlockSequence random_blocks(std::mt19937_64& rng, int max_m, int max_entry) {
  std::uniform_int_distribution<int> m_dist(0, max_m), entry(1, max_entry);
  const int m = m_dist(rng);
  cdv::BlockSequence b;
  for (int j = 0; j <= m; ++j) b.cones.push_back(entry(rng));
  for (int j = 0; j < m; ++j) b.isolates.push_back(entry(rng));
  return b;
}

// ---- oracles --------------------------------------------------------------

/// True iff some 4 vertices induce P4, C4 or 2K2. Matches each 4-subset
/// against the three graphs under all 24 relabelings.
inline bool has_forbidden_induced(const cdv::Adjacency& g) {
  // Edge sets on {0,1,2,3}: P4 0-1-2-3, C4 0-1-2-3-0, 2K2 01 23.
  using Pattern = std::array<std::array<bool, 4>, 4>;
  auto make = [](std::initializer_list<std::pair<int, int>> edges) {
    Pattern p{};
    for (auto [u, v] : edges) p[u][v] = p[v][u] = true;
    return p;
  };
  const std::array<Pattern, 3> patterns = {make({{0, 1}, {1, 2}, {2, 3}}), make({{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
                                           make({{0, 1}, {2, 3}})};
  const int n = static_cast<int>(g.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          std::array<int, 4> perm = {a, b, c, d};
          std::sort(perm.begin(), perm.end());
          do {
            for (const auto& p : patterns) {
              bool match = true;
              for (int x = 0; x < 4 && match; ++x)
                for (int y = x + 1; y < 4 && match; ++y)
                  match = g(static_cast<std::size_t>(perm[x]), static_cast<std::size_t>(perm[y])) == p[x][y];
              if (match) return true;
            }
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
  return false;
}

/// Graph from a bit mask over the pairs (u<v) in lexicographic order.
inline cdv::Adjacency graph_from_mask(std::size_t n, std::uint64_t mask) {
  cdv::Adjacency g(n);
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) g.connect(u, v);
  return g;
}

/// Adjacency straight from the construction rule, in construction order.
inline cdv::Adjacency construction_graph(const cdv::BuildSequence& seq) {
  cdv::Adjacency g(seq.size());
  for (std::size_t v = 0; v < seq.size(); ++v)
    if (seq[v] == cdv::Step::Cone)
      for (std::size_t u = 0; u < v; ++u) g.connect(u, v);
  return g;
}

inline bool pairwise_weights_hold(const cdv::WeightAssignment& w, const cdv::Adjacency& g) {
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (w.weights[u] < 0) return false;
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if ((w.weights[u] + w.weights[v] > w.threshold) != g(u, v)) return false;
  }
  return w.threshold >= 0;
}

/// Exhaustive over all 2^n subsets.
inline bool independence_weights_hold(const cdv::WeightAssignment& w, const cdv::Adjacency& g) {
  const std::size_t n = g.size();
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set) {
    Rational sum(0);
    bool independent = true;
    for (std::size_t u = 0; u < n; ++u) {
      if (!((set >> u) & 1)) continue;
      sum += w.weights[u];
      for (std::size_t v = u + 1; v < n; ++v)
        if (((set >> v) & 1) && g(u, v)) independent = false;
    }
    if ((sum <= w.threshold) != independent) return false;
  }
  return true;
}

}  // namespace fixtures

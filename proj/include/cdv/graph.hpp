#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cdv/matrix.hpp"
#include "cdv/rational.hpp"
#include "cdv/sequence.hpp"

namespace cdv {

/// Symmetric 0/1 adjacency without self-loops.
class Adjacency {
 public:
  Adjacency() = default;
  explicit Adjacency(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t u, std::size_t v) const { return bits_[u * n_ + v] != 0; }

  /// Sets both (u,v) and (v,u).
  void connect(std::size_t u, std::size_t v, bool on = true);
  /// Raw one-sided write, for building possibly malformed input.
  void set_entry(std::size_t u, std::size_t v, bool on) { bits_[u * n_ + v] = on ? 1 : 0; }

  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const;

  /// Throws Error{InvalidArgument} if asymmetric or with a nonzero diagonal.
  void validate() const;

  /// out(i, j) = (*this)(order[i], order[j]).
  Adjacency permuted(const std::vector<int>& order) const;

  friend bool operator==(const Adjacency&, const Adjacency&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// A threshold graph indexed by weakly decreasing degree. Ties keep
/// construction order, which reproduces the block layout of the Laplacian.
struct ThresholdGraph {
  std::size_t n = 0;
  Adjacency adjacency;       // degree order
  std::vector<int> perm;     // construction index -> degree index
  std::vector<int> order;    // degree index -> construction index
  std::vector<int> degrees;  // weakly decreasing

  /// Adjacency in construction order.
  Adjacency construction_adjacency() const { return adjacency.permuted(perm); }
};

ThresholdGraph build_graph(const BuildSequence& seq);

/// Degree on the diagonal, -1 on edges.
IntMatrix laplacian(const ThresholdGraph& g);

struct ForbiddenWitness {
  enum class Kind { P4, C4, TwoK2 };
  Kind kind = Kind::P4;
  /// P4 and C4: vertices in path/cycle order. 2K2: the two edges (0,1), (2,3).
  std::array<int, 4> vertices{};
};

std::string to_string(ForbiddenWitness::Kind kind);

/// Induced P4, C4 or 2K2 found by scanning every 4-subset, or nullopt.
std::optional<ForbiddenWitness> find_forbidden_subgraph(const Adjacency& adj);

using Recognition = std::variant<BuildSequence, ForbiddenWitness>;

/// Peels a dominating vertex (cone) or an isolated vertex (isolate) until one
/// vertex is left; the reversed record rebuilds an isomorphic graph. A
/// dominating vertex is preferred when both exist. When peeling gets stuck the
/// graph is not threshold and a forbidden induced subgraph is returned.
Recognition recognize(const Adjacency& adj);

/// Edge list: first line "n", then one "u v" pair (0-based) per line.
Adjacency parse_edge_list(std::string_view text);

struct WeightAssignment {
  enum class Flavor { PairwiseEdge, Independence };
  Flavor flavor = Flavor::PairwiseEdge;
  std::vector<Rational> weights;  // construction order
  Rational threshold;
};

/// w_u + w_v > t exactly on edges. t = 8n; the vertex added at step j
/// (1-based) weighs 4n + 2j as a cone and 4n - 2j - 1 as an isolate.
WeightAssignment edge_weights(const BuildSequence& seq);

/// sum_{v in X} w_v <= t exactly for independent X. Each isolate in block j
/// weighs 1 + sum_{l > j} i_l x_l, t = 2 (sum of isolate weights) + 1, and a
/// cone weighs t minus the weight of the isolates added after it.
WeightAssignment independence_weights(const BuildSequence& seq);

}  // namespace cdv

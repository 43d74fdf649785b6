#include "cdv/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cdv/error.hpp"

namespace cdv {

void Adjacency::connect(std::size_t u, std::size_t v, bool on) {
  set_entry(u, v, on);
  set_entry(v, u, on);
}

std::size_t Adjacency::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t v = 0; v < n_; ++v) d += (*this)(u, v) ? 1 : 0;
  return d;
}

std::size_t Adjacency::edge_count() const {
  std::size_t e = 0;
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v) e += (*this)(u, v) ? 1 : 0;
  return e;
}

void Adjacency::validate() const {
  for (std::size_t u = 0; u < n_; ++u) {
    if ((*this)(u, u))
      throw Error(ErrorCode::InvalidArgument, "adjacency has a self-loop at vertex " + std::to_string(u));
    for (std::size_t v = u + 1; v < n_; ++v)
      if ((*this)(u, v) != (*this)(v, u))
        throw Error(ErrorCode::InvalidArgument, "adjacency is not symmetric");
  }
}

Adjacency Adjacency::permuted(const std::vector<int>& order) const {
  if (order.size() != n_) throw Error(ErrorCode::DimensionMismatch, "permutation size mismatch");
  Adjacency out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      out.set_entry(i, j, (*this)(static_cast<std::size_t>(order[i]), static_cast<std::size_t>(order[j])));
  return out;
}

ThresholdGraph build_graph(const BuildSequence& seq) {
  const std::size_t n = seq.size();
  Adjacency built(n);
  for (std::size_t v = 1; v < n; ++v)
    if (seq[v] == Step::Cone)
      for (std::size_t u = 0; u < v; ++u) built.connect(u, v);

  ThresholdGraph g;
  g.n = n;
  g.order.resize(n);
  std::iota(g.order.begin(), g.order.end(), 0);
  std::stable_sort(g.order.begin(), g.order.end(), [&](int a, int b) {
    return built.degree(static_cast<std::size_t>(a)) > built.degree(static_cast<std::size_t>(b));
  });
  g.perm.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) g.perm[static_cast<std::size_t>(g.order[i])] = static_cast<int>(i);
  g.adjacency = built.permuted(g.order);
  for (std::size_t i = 0; i < n; ++i) g.degrees.push_back(static_cast<int>(g.adjacency.degree(i)));
  return g;
}

IntMatrix laplacian(const ThresholdGraph& g) {
  IntMatrix l(g.n, g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    l(i, i) = g.degrees[i];
    for (std::size_t j = 0; j < g.n; ++j)
      if (g.adjacency(i, j)) l(i, j) = -1;
  }
  return l;
}

std::string to_string(ForbiddenWitness::Kind kind) {
  switch (kind) {
    case ForbiddenWitness::Kind::P4: return "P4";
    case ForbiddenWitness::Kind::C4: return "C4";
    case ForbiddenWitness::Kind::TwoK2: return "2K2";
  }
  return "?";
}

namespace {

// Orders the four vertices of an induced P4, C4 or 2K2 for display.
std::optional<ForbiddenWitness> classify_quad(const Adjacency& adj, std::array<int, 4> q) {
  auto e = [&](int a, int b) { return adj(static_cast<std::size_t>(a), static_cast<std::size_t>(b)); };
  std::array<int, 4> deg{};
  int edges = 0;
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y)
      if (e(q[x], q[y])) {
        ++deg[x];
        ++deg[y];
        ++edges;
      }
  const bool all_one = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
  const bool all_two = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });

  ForbiddenWitness w;
  if (edges == 2 && all_one) {
    w.kind = ForbiddenWitness::Kind::TwoK2;
    int partner = 1;
    while (!e(q[0], q[partner])) ++partner;
    std::array<int, 2> rest{};
    int r = 0;
    for (int x = 1; x < 4; ++x)
      if (x != partner) rest[r++] = q[x];
    w.vertices = {q[0], q[partner], rest[0], rest[1]};
    return w;
  }
  if ((edges == 3 && std::count(deg.begin(), deg.end(), 1) == 2 && std::count(deg.begin(), deg.end(), 2) == 2) ||
      (edges == 4 && all_two)) {
    w.kind = edges == 3 ? ForbiddenWitness::Kind::P4 : ForbiddenWitness::Kind::C4;
    int start = 0;
    if (edges == 3)
      while (deg[start] != 1) ++start;
    std::array<bool, 4> used{};
    std::array<int, 4> path{};
    path[0] = start;
    used[start] = true;
    for (int step = 1; step < 4; ++step) {
      int next = 0;
      while (used[next] || !e(q[path[step - 1]], q[next])) ++next;
      path[step] = next;
      used[next] = true;
    }
    for (int x = 0; x < 4; ++x) w.vertices[x] = q[path[x]];
    return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ForbiddenWitness> find_forbidden_subgraph(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (auto w = classify_quad(adj, {a, b, c, d})) return w;
  return std::nullopt;
}

Recognition recognize(const Adjacency& adj) {
  adj.validate();
  const std::size_t n = adj.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "graph has no vertices");

  std::vector<bool> alive(n, true);
  std::vector<std::size_t> live_degree(n);
  for (std::size_t v = 0; v < n; ++v) live_degree[v] = adj.degree(v);

  std::vector<Step> peeled;
  for (std::size_t remaining = n; remaining > 1; --remaining) {
    std::optional<std::size_t> pick;
    Step kind = Step::Cone;
    for (std::size_t v = 0; v < n && !pick; ++v)
      if (alive[v] && live_degree[v] == remaining - 1) pick = v;
    if (!pick) {
      kind = Step::Isolate;
      for (std::size_t v = 0; v < n && !pick; ++v)
        if (alive[v] && live_degree[v] == 0) pick = v;
    }
    if (!pick) {
      auto w = find_forbidden_subgraph(adj);
      if (!w) throw Error(ErrorCode::Numeric, "peeling stuck but no forbidden subgraph found");
      return *w;
    }
    alive[*pick] = false;
    for (std::size_t u = 0; u < n; ++u)
      if (alive[u] && adj(u, *pick)) --live_degree[u];
    peeled.push_back(kind);
  }
  peeled.push_back(Step::Cone);
  std::reverse(peeled.begin(), peeled.end());
  return BuildSequence(std::move(peeled));
}

Adjacency parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1;
  if (!(in >> n) || n <= 0) throw Error(ErrorCode::Parse, "edge list must start with a positive vertex count");
  Adjacency adj(static_cast<std::size_t>(n));
  long long u = 0, v = 0;
  while (in >> u) {
    if (!(in >> v)) throw Error(ErrorCode::Parse, "edge list has a dangling vertex id");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::Parse, "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    if (u == v) throw Error(ErrorCode::Parse, "self-loop at vertex " + std::to_string(u));
    adj.connect(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  if (!in.eof()) throw Error(ErrorCode::Parse, "edge list contains a non-integer token");
  return adj;
}

WeightAssignment edge_weights(const BuildSequence& seq) {
  const long n = static_cast<long>(seq.size());
  WeightAssignment w;
  w.flavor = WeightAssignment::Flavor::PairwiseEdge;
  w.threshold = 8 * n;
  for (long j = 1; j <= n; ++j)
    w.weights.emplace_back(seq[static_cast<std::size_t>(j - 1)] == Step::Cone ? 4 * n + 2 * j : 4 * n - 2 * j - 1);
  return w;
}

WeightAssignment independence_weights(const BuildSequence& seq) {
  const BlockSequence b = to_blocks(seq);
  const std::size_t m = b.m();

  std::vector<Rational> block_weight(m);
  Rational later(0);  // sum over later blocks of i_l * x_l
  for (std::size_t j = m; j-- > 0;) {
    block_weight[j] = 1 + later;
    later += b.isolates[j] * block_weight[j];
  }
  const Rational isolate_total = later;

  WeightAssignment w;
  w.flavor = WeightAssignment::Flavor::Independence;
  w.threshold = 2 * isolate_total + 1;

  // Walk the steps, tracking the isolate weight still to come.
  Rational still_to_come = isolate_total;
  std::size_t block = 0;
  for (std::size_t s = 0; s < seq.size(); ++s) {
    if (seq[s] == Step::Cone) {
      w.weights.push_back(w.threshold - still_to_come);
    } else {
      w.weights.push_back(block_weight[block]);
      still_to_come -= block_weight[block];
      if (s + 1 < seq.size() && seq[s + 1] == Step::Cone) ++block;
    }
  }
  return w;
}

}  // namespace cdv

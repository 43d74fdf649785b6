// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

#include "cdv/error.hpp"
#include "cdv/graph.hpp"
#include "cdv/linalg.hpp"
#include "cdv/parametric.hpp"
#include "cdv/recursive.hpp"
#include "cdv/verify.hpp"
#include "fixtures.hpp"

using namespace cdv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure and keeps counting.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    failures_ += ok ? 0 : 1;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream out;
    out << summary << " (" << checks_ << " checks";
    if (failures_) out << ", " << failures_ << " failed; first: " << first_failure_;
    out << ")";
    return {failures_ == 0, out.str()};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_failure_;
};

// Matrices from criteria 3-7, collected for the cross-method check.
std::vector<RatMatrix> rational_pool;

std::vector<BlockSequence> corpus() {
  std::mt19937_64 rng(20240601);
  std::vector<BlockSequence> out;
  for (int t = 0; t < 200; ++t) out.push_back(fixtures::random_blocks(rng, 4, 4));
  return out;
}

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::string name(const BlockSequence& b) {
  std::string s;
  for (int x : b.interleaved()) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

Outcome golden_laplacians() {
  Tally t;
  t.check(laplacian(build_graph(parse_sequence(fixtures::kSevenVertex))) == fixtures::seven_laplacian(), "7-vertex");
  t.check(laplacian(build_graph(parse_sequence(fixtures::kTwelveVertex))) == fixtures::twelve_laplacian(),
          "12-vertex");
  return t.outcome("7-vertex 7x7 and 12-vertex 12x12 entry for entry");
}

Outcome mu_formula() {
  Tally t;
  const int a = mu(parse_sequence(fixtures::kSevenVertex));
  const int b = mu(parse_sequence(fixtures::kTwelveVertex));
  t.check(a == 4, "mu(7-vertex)");
  t.check(b == 6, "mu(12-vertex)");
  return t.outcome("mu(7-vertex)=" + std::to_string(a) + ", mu(12-vertex)=" + std::to_string(b));
}

Outcome parametric_golden() {
  Tally t;
  const auto b = to_blocks(parse_sequence(fixtures::kTwelveVertex));
  const auto sym = symbolic_parametric(b);
  const auto at0 = fixtures::twelve_parametric(Rational(0));
  const auto at1 = fixtures::twelve_parametric(Rational(1));
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) {
      t.check(sym(i, j).constant == at0(i, j), "constant term");
      t.check(sym(i, j).coefficient == at1(i, j) - at0(i, j), "coefficient of a");
    }
  for (const Rational a : {Rational(1), Rational(3, 7), Rational(25, 2)})
    t.check(construct_parametric(b, a).matrix == fixtures::twelve_parametric(a), "numeric at a=" + to_string(a));
  const auto m = construct_parametric(b, Rational(1)).matrix;
  rational_pool.push_back(m);
  const auto rank = rank_exact(m);
  const auto in = inertia_exact(m);
  t.check(rank == 6, "rank");
  t.check(in == Inertia{1, 6, 5}, "inertia");
  return t.outcome("symbolic match with b=a+2, c=a+9/4, d=a+53/20; a=1: rank " + std::to_string(rank) +
                   ", inertia (" + std::to_string(in.neg) + "," + std::to_string(in.zero) + "," +
                   std::to_string(in.pos) + ")");
}

Outcome erratum() {
  Tally t;
  const auto b = to_blocks(parse_sequence(fixtures::kSevenVertex));
  const auto sym = symbolic_parametric(b);
  // Row 0 of the degree-ordered matrix reads -a, -a, -alpha_2, -alpha_2, -alpha_3, ...
  t.check(sym(0, 2) == AffineEntry{Rational(-1, 2), Rational(-1)}, "alpha_2 = a+1/2");
  t.check(sym(0, 4) == AffineEntry{Rational(-3, 4), Rational(-1)}, "alpha_3 = a+3/4");
  for (const Rational a : {Rational(1), Rational(2, 3), Rational(9)}) {
    const auto p = alphas(b, a);
    t.check(p.alpha[1] == a + Rational(1, 2), "alphas()[2]");
    t.check(p.alpha[2] == a + Rational(3, 4), "alphas()[3]");
    const auto corrected = fixtures::seven_parametric(a, a + Rational(1, 2), a + Rational(3, 4));
    const auto misprint = fixtures::seven_parametric(a, a + Rational(1, 4), a + Rational(3, 4));
    t.check(corrected == construct_parametric(b, a).matrix, "construction equals corrected table");
    t.check(check_row_dependencies(corrected, b), "dependencies hold with a+1/2");
    t.check(!check_row_dependencies(misprint, b), "dependencies fail with a+1/4");
    rational_pool.push_back(corrected);
    rational_pool.push_back(misprint);
  }
  return t.outcome("alpha_2=a+1/2, alpha_3=a+3/4; row dependencies pass with a+1/2, fail with the a+1/4 variant");
}

Outcome rank_law(const std::vector<BlockSequence>& blocks) {
  Tally t;
  for (const auto& b : blocks) {
    const auto m = construct_parametric(b).matrix;
    rational_pool.push_back(m);
    t.check(rank_exact(m) == static_cast<std::size_t>(1 + sum(b.isolates)), name(b));
  }
  return t.outcome("rank = 1 + sum i_j on " + std::to_string(blocks.size()) + " random block sequences");
}

Outcome axioms_exact(const std::vector<BlockSequence>& blocks) {
  Tally t;
  std::size_t largest = 0;
  for (const auto& b : blocks) {
    const auto m = construct_parametric(b).matrix;
    const auto g = build_graph(from_blocks(b)).adjacency;
    const auto k = static_cast<std::size_t>(sum(b.cones));
    const auto i = static_cast<std::size_t>(sum(b.isolates));
    largest = std::max(largest, m.rows());
    t.check(check_sign_pattern(m, g), "sign pattern " + name(b));
    t.check(inertia_exact(m) == Inertia{1, k - 1, i}, "inertia " + name(b));
    t.check(check_strong_arnold(m, g) == 0, "SAP " + name(b));
  }
  return t.outcome("sign pattern, inertia (1,k-1,i), SAP kernel 0; n up to " + std::to_string(largest));
}

Outcome eigenvalue_bounds(const std::vector<BlockSequence>& blocks) {
  Tally t;
  double worst_strict = std::numeric_limits<double>::infinity();
  double worst_positive = std::numeric_limits<double>::infinity();
  std::size_t equality_cases = 0, strict_cases = 0;
  for (const auto& b : blocks) {
    const auto r = construct_parametric(b, Rational(1));
    rational_pool.push_back(r.matrix);
    const auto s = check_spectral_bounds(r.matrix, b, r.params);
    const double norm = frobenius_norm(to_float(r.matrix));
    t.check(s.tolerance == 1e-9 * norm, "tolerance pinned " + name(b));
    t.check(s.negative_ok, "negative bound " + name(b));
    t.check(s.positive_ok, "positive bound " + name(b));
    if (b.m() == 0) {
      // -alpha_1 J_k: the bound -k alpha is attained.
      ++equality_cases;
      t.check(std::abs(s.negative_margin()) <= s.tolerance, "m=0 equality " + name(b));
      t.check(!s.min_positive, "m=0 has no positive eigenvalue " + name(b));
      continue;
    }
    ++strict_cases;
    t.check(s.negative_margin() >= s.tolerance, "strict negative margin " + name(b));
    worst_strict = std::min(worst_strict, s.negative_margin() / norm);
    const double k = sum(b.cones);
    t.check(s.positive_bound > 1.0 / k, "1/beta_1 > 1/k " + name(b));
    if (s.min_positive) worst_positive = std::min(worst_positive, (*s.min_positive - s.positive_bound) / norm);
  }
  std::ostringstream d;
  d << "a=1; m>=1 (" << strict_cases << "): strict margin >= 1e-9||M||_F, worst " << worst_strict
    << "||M||_F, min lambda_pos - 1/beta_1 >= " << worst_positive << "||M||_F; m=0 (" << equality_cases
    << "): lambda_neg = -k alpha within tolerance";
  return t.outcome(d.str());
}

Outcome recursive_construction() {
  Tally t;
  std::mt19937_64 rng(77);
  std::vector<BuildSequence> seqs;
  for (std::size_t n = 2; n <= 12; ++n)
    for (auto& s : fixtures::all_connected(n)) seqs.push_back(std::move(s));
  const std::size_t exhaustive = seqs.size();
  for (int r = 0; r < 200; ++r) seqs.push_back(fixtures::random_connected(rng, 2, 25));

  double worst_residual = 0.0;
  for (const auto& seq : seqs) {
    const auto res = construct_recursive(seq);
    const auto g = build_graph(seq);
    const auto cert = verify(res.matrix, g.construction_adjacency());
    const std::string id = seq.to_string();
    t.check(cert.corank == static_cast<std::size_t>(mu(seq)), "corank " + id);
    t.check(cert.m1_ok && cert.m2_ok && cert.m3_ok, "axioms " + id);
    for (const auto& step : res.cone_steps) {
      worst_residual = std::max(worst_residual, step.witness_residual);
      t.check(step.witness_residual <= 1e-8, "witness " + id);
    }
  }
  std::ostringstream d;
  d << exhaustive << " exhaustive (n=2..12) + 200 random (n<=25): corank = mu, float axioms, worst witness residual "
    << worst_residual << "||M||_F";
  return t.outcome(d.str());
}

Outcome recognition() {
  Tally t;
  std::size_t graphs = 0, threshold = 0;
  auto one = [&](const Adjacency& g, const std::string& id) {
    ++graphs;
    const auto r = recognize(g);
    const bool oracle = !fixtures::has_forbidden_induced(g);
    t.check(std::holds_alternative<BuildSequence>(r) == oracle, "agreement " + id);
    if (const auto* seq = std::get_if<BuildSequence>(&r)) {
      ++threshold;
      // Threshold graphs are determined by their degree sequence.
      std::vector<std::size_t> a, b;
      const auto rebuilt = fixtures::construction_graph(*seq);
      for (std::size_t v = 0; v < g.size(); ++v) {
        a.push_back(g.degree(v));
        b.push_back(rebuilt.degree(v));
      }
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      t.check(a == b, "rebuilt degrees " + id);
    } else {
      const auto w = std::get<ForbiddenWitness>(r);
      Adjacency sub(4);
      for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y)
          if (g(static_cast<std::size_t>(w.vertices[x]), static_cast<std::size_t>(w.vertices[y])))
            sub.connect(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
      t.check(fixtures::has_forbidden_induced(sub), "witness " + id);
    }
  };
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
      one(fixtures::graph_from_mask(n, mask), "n=" + std::to_string(n) + " mask=" + std::to_string(mask));
  }
  const std::size_t exhaustive = graphs;

  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> size(1, 10);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int r = 0; r < 1000; ++r) {
    const std::size_t n = size(rng);
    Adjacency g(n);
    if (r % 2 == 0) {
      // Relabelled threshold graph, sometimes with one pair toggled.
      std::vector<Step> steps{Step::Cone};
      std::bernoulli_distribution coin(0.5);
      for (std::size_t j = 1; j < n; ++j) steps.push_back(coin(rng) ? Step::Cone : Step::Isolate);
      const BuildSequence seq(steps);
      std::vector<int> relabel(n);
      std::iota(relabel.begin(), relabel.end(), 0);
      std::shuffle(relabel.begin(), relabel.end(), rng);
      g = fixtures::construction_graph(seq).permuted(relabel);
      if (n >= 2 && r % 4 == 0) {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        const std::size_t u = pick(rng);
        std::size_t v = pick(rng);
        while (v == u) v = pick(rng);
        g.connect(u, v, !g(u, v));
      }
      // Canonical recognition returns the generating sequence exactly.
      if (r % 4 != 0) {
        const auto got = recognize(g);
        t.check(std::holds_alternative<BuildSequence>(got) && std::get<BuildSequence>(got) == seq,
                "round trip " + seq.to_string());
        if (seq.connected() && std::holds_alternative<BuildSequence>(got))
          t.check(to_blocks(std::get<BuildSequence>(got)) == to_blocks(seq), "blocks " + seq.to_string());
      }
    } else {
      std::bernoulli_distribution edge(density(rng));
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
          if (edge(rng)) g.connect(u, v);
    }
    one(g, "random #" + std::to_string(r));
  }
  std::ostringstream d;
  d << exhaustive << " labelled graphs n<=6 + 1000 random n<=10 (" << threshold << " threshold in total)";
  return t.outcome(d.str());
}

Outcome weights() {
  Tally t;
  std::mt19937_64 rng(99);
  for (int r = 0; r < 100; ++r) {
    const auto seq = fixtures::random_connected(rng, 1, 12);
    const auto g = fixtures::construction_graph(seq);
    t.check(fixtures::pairwise_weights_hold(edge_weights(seq), g), "edge " + seq.to_string());
    t.check(fixtures::independence_weights_hold(independence_weights(seq), g), "independence " + seq.to_string());
  }
  return t.outcome("100 random connected sequences n<=12: all pairs and all 2^n subsets");
}

Outcome cross_method() {
  Tally t;
  for (const auto& m : rational_pool) t.check(inertia_exact(m) == inertia_float(to_float(m)), "inertia mismatch");
  return t.outcome(std::to_string(rational_pool.size()) + " rational matrices from criteria 3-7");
}

}  // namespace

int main() {
  const auto blocks = corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden Laplacians", golden_laplacians},
      {"mu formula", mu_formula},
      {"parametric golden matrix", parametric_golden},
      {"erratum check", erratum},
      {"rank law", [&] { return rank_law(blocks); }},
      {"axiom suite (exact)", [&] { return axioms_exact(blocks); }},
      {"eigenvalue bounds", [&] { return eigenvalue_bounds(blocks); }},
      {"recursive construction", recursive_construction},
      {"recognition", recognition},
      {"weight characterizations", weights},
      {"cross-method inertia", cross_method},
  };

  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %-26s %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", c + 1, criteria[c].first.c_str(),
                o.detail.c_str(), secs);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}

#include "cdv/io.hpp"

#include <iomanip>
#include <numeric>
#include <sstream>

#include "cdv/error.hpp"

namespace cdv::io {

json sequence_info(const BuildSequence& seq) {
  const SequenceCounts c = counts(seq);
  json j;
  j["n"] = c.n;
  j["steps"] = seq.to_string();
  j["cones"] = c.cones;
  j["isolates"] = c.isolates;
  j["m"] = c.isolate_blocks;
  j["connected"] = seq.connected();
  if (seq.connected()) {
    j["blocks"] = to_blocks(seq).interleaved();
    j["case"] = static_cast<int>(classify(seq));
    j["mu"] = mu(seq);
    if (seq.size() == 1) j["convention"] = "mu(K1) = 0";
  }
  return j;
}

json laplacian_json(const IntMatrix& l) {
  json rows = json::array();
  for (std::size_t i = 0; i < l.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < l.cols(); ++j) row.push_back(l(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"n", l.rows()}, {"rows", std::move(rows)}};
}

std::string laplacian_csv(const IntMatrix& l) {
  std::ostringstream out;
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.cols(); ++j) out << (j ? "," : "") << l(i, j);
    out << '\n';
  }
  return out.str();
}

std::string laplacian_pretty(const IntMatrix& l) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j) width = std::max(width, std::to_string(l(i, j)).size());
  std::ostringstream out;
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.cols(); ++j)
      out << (j ? " " : "") << std::setw(static_cast<int>(width)) << l(i, j);
    out << '\n';
  }
  return out.str();
}

std::string to_string(Order order) { return order == Order::Degree ? "degree" : "construction"; }

std::size_t MatrixDocument::size() const {
  return std::visit([](const auto& m) { return m.rows(); }, matrix);
}

json to_json(const MatrixDocument& doc) {
  json j;
  json rows = json::array();
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        j["kind"] = std::is_same_v<M, RatMatrix> ? "rational" : "float";
        j["n"] = m.rows();
        for (std::size_t r = 0; r < m.rows(); ++r) {
          json row = json::array();
          for (std::size_t c = 0; c < m.cols(); ++c) {
            if constexpr (std::is_same_v<M, RatMatrix>)
              row.push_back(cdv::to_string(m(r, c)));
            else
              row.push_back(m(r, c));
          }
          rows.push_back(std::move(row));
        }
      },
      doc.matrix);
  j["rows"] = std::move(rows);
  j["order"] = to_string(doc.order);
  if (!doc.method.empty()) j["method"] = doc.method;
  if (!doc.sequence.empty()) j["sequence"] = doc.sequence;
  if (doc.alpha1) j["alpha1"] = cdv::to_string(*doc.alpha1);
  return j;
}

MatrixDocument matrix_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("matrix file is not valid JSON: ") + e.what());
  }
  try {
    MatrixDocument doc;
    const std::string kind = j.at("kind").get<std::string>();
    const auto n = j.at("n").get<std::size_t>();
    const json& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != n)
      throw Error(ErrorCode::Parse, "matrix 'rows' must hold n rows");
    for (const auto& row : rows)
      if (!row.is_array() || row.size() != n) throw Error(ErrorCode::Parse, "matrix rows must hold n entries");

    if (kind == "rational") {
      RatMatrix m(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          const json& e = rows[r][c];
          if (e.is_string()) m(r, c) = parse_rational(e.get<std::string>());
          else if (e.is_number_integer()) m(r, c) = parse_rational(std::to_string(e.get<long long>()));
          else throw Error(ErrorCode::Parse, "rational entries must be \"p/q\" strings or integers");
        }
      doc.matrix = std::move(m);
    } else if (kind == "float") {
      FloatMatrix m(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          if (!rows[r][c].is_number()) throw Error(ErrorCode::Parse, "float entries must be numbers");
          m(r, c) = rows[r][c].get<double>();
        }
      doc.matrix = std::move(m);
    } else {
      throw Error(ErrorCode::Parse, "unsupported matrix kind '" + kind + "'");
    }

    const std::string order = j.value("order", std::string("degree"));
    if (order == "degree") doc.order = Order::Degree;
    else if (order == "construction") doc.order = Order::Construction;
    else throw Error(ErrorCode::Parse, "unknown order '" + order + "'");
    doc.method = j.value("method", std::string());
    doc.sequence = j.value("sequence", std::string());
    if (j.contains("alpha1")) doc.alpha1 = parse_rational(j.at("alpha1").get<std::string>());
    return doc;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed matrix file: ") + e.what());
  }
}

json symbolic_json(const Matrix<AffineEntry>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return json{{"kind", "symbolic"}, {"n", m.rows()}, {"parameter", "a"}, {"order", "degree"}, {"rows", rows}};
}

namespace {

json bound_fields(const SpectralBounds& s) {
  return json{{"negative_eigenvalue", s.negative_eigenvalue},
              {"negative_bound", s.negative_bound},
              {"negative_ok", s.negative_ok},
              {"min_positive_eigenvalue", s.min_positive ? json(*s.min_positive) : json(nullptr)},
              {"positive_bound", s.positive_bound},
              {"positive_ok", s.positive_ok},
              {"tolerance", s.tolerance},
              {"ok", s.ok()}};
}

}  // namespace

json to_json(const CdvCertificate& cert) {
  json j;
  j["m1"] = cert.m1_ok;
  j["m2"] = cert.m2_ok;
  j["m3"] = cert.m3_ok;
  j["inertia"] = {cert.inertia.neg, cert.inertia.zero, cert.inertia.pos};
  j["corank"] = cert.corank;
  j["sap_kernel_dim"] = cert.sap_kernel_dim;
  j["mode"] = cert.mode == VerifyMode::Exact ? "exact" : "float";
  if (cert.bounds) j["bounds"] = bound_fields(*cert.bounds);
  j["ok"] = cert.all_ok();
  return j;
}

json to_json(const SpectralBounds& s, const BlockSequence& b, const AlphaParams& params) {
  json j;
  j["k"] = std::accumulate(b.cones.begin(), b.cones.end(), 0);
  j["i"] = std::accumulate(b.isolates.begin(), b.isolates.end(), 0);
  j["alpha1"] = cdv::to_string(params.alpha1());
  j["alpha"] = cdv::to_string(params.aggregate());
  j["beta"] = params.beta;
  j.update(bound_fields(s));
  return j;
}

json to_json(const WeightAssignment& w) {
  json weights = json::array();
  for (const auto& x : w.weights) weights.push_back(cdv::to_string(x));
  return json{{"flavor", w.flavor == WeightAssignment::Flavor::PairwiseEdge ? "edge" : "independence"},
              {"order", "construction"},
              {"threshold", cdv::to_string(w.threshold)},
              {"weights", weights}};
}

std::string summary(const Recognition& r) {
  if (const auto* seq = std::get_if<BuildSequence>(&r)) return seq->to_string();
  const auto& w = std::get<ForbiddenWitness>(r);
  std::ostringstream out;
  out << cdv::to_string(w.kind) << ":";
  for (int v : w.vertices) out << ' ' << v;
  return out.str();
}

json to_json(const Recognition& r) {
  if (const auto* seq = std::get_if<BuildSequence>(&r)) {
    json j{{"threshold", true}, {"steps", seq->to_string()}};
    if (seq->connected()) j["blocks"] = to_blocks(*seq).interleaved();
    return j;
  }
  const auto& w = std::get<ForbiddenWitness>(r);
  return json{{"threshold", false}, {"witness", {{"kind", cdv::to_string(w.kind)}, {"vertices", w.vertices}}}};
}

}  // namespace cdv::io

#include "cdv.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <variant>

#include "cdv/error.hpp"
#include "cdv/graph.hpp"
#include "cdv/io.hpp"
#include "cdv/parametric.hpp"
#include "cdv/recursive.hpp"
#include "cdv/sequence.hpp"
#include "cdv/verify.hpp"

struct cdv_sequence {
  cdv::BuildSequence seq;
};

struct cdv_matrix {
  cdv::io::MatrixDocument doc;
};

struct cdv_certificate {
  cdv::CdvCertificate cert;
};

namespace {

thread_local std::string last_error;

cdv_status to_status(cdv::ErrorCode code) {
  switch (code) {
    case cdv::ErrorCode::Parse: return CDV_E_PARSE;
    case cdv::ErrorCode::InvalidArgument: return CDV_E_INVALID_ARGUMENT;
    case cdv::ErrorCode::NotConnected: return CDV_E_NOT_CONNECTED;
    case cdv::ErrorCode::DimensionMismatch: return CDV_E_DIMENSION;
    case cdv::ErrorCode::NotSymmetric: return CDV_E_NOT_SYMMETRIC;
    case cdv::ErrorCode::NonConvergence: return CDV_E_NON_CONVERGENCE;
    case cdv::ErrorCode::AlphaTooSmall: return CDV_E_ALPHA_TOO_SMALL;
    case cdv::ErrorCode::Numeric: return CDV_E_NUMERIC;
  }
  return CDV_E_INTERNAL;
}

template <typename F>
cdv_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return CDV_OK;
  } catch (const cdv::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CDV_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CDV_E_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<cdv::Rational> optional_rational(const char* text) {
  if (!text) return std::nullopt;
  return cdv::parse_rational(text);
}

}  // namespace

extern "C" {

const char* cdv_last_error(void) { return last_error.c_str(); }

const char* cdv_status_name(cdv_status status) {
  switch (status) {
    case CDV_OK: return "ok";
    case CDV_E_PARSE: return "parse error";
    case CDV_E_INVALID_ARGUMENT: return "invalid argument";
    case CDV_E_NOT_CONNECTED: return "sequence not connected";
    case CDV_E_DIMENSION: return "dimension mismatch";
    case CDV_E_NOT_SYMMETRIC: return "matrix not symmetric";
    case CDV_E_NON_CONVERGENCE: return "eigensolver did not converge";
    case CDV_E_ALPHA_TOO_SMALL: return "alpha1 too small";
    case CDV_E_NUMERIC: return "numerical failure";
    case CDV_E_NULL_ARGUMENT: return "null argument";
    case CDV_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void cdv_string_free(char* s) { std::free(s); }

cdv_status cdv_sequence_parse(const char* text, cdv_sequence** out) {
  if (!text || !out) return CDV_E_NULL_ARGUMENT;
  return guarded([&] { *out = new cdv_sequence{cdv::parse_sequence(text)}; });
}

void cdv_sequence_free(cdv_sequence* seq) { delete seq; }

cdv_status cdv_sequence_text(const cdv_sequence* seq, char** out) {
  if (!seq || !out) return CDV_E_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(seq->seq.to_string()); });
}

cdv_status cdv_sequence_counts(const cdv_sequence* seq, size_t* n, size_t* cones, size_t* isolates,
                               size_t* isolate_blocks) {
  if (!seq) return CDV_E_NULL_ARGUMENT;
  const cdv::SequenceCounts c = cdv::counts(seq->seq);
  if (n) *n = c.n;
  if (cones) *cones = c.cones;
  if (isolates) *isolates = c.isolates;
  if (isolate_blocks) *isolate_blocks = c.isolate_blocks;
  return CDV_OK;
}

int cdv_sequence_connected(const cdv_sequence* seq) { return seq && seq->seq.connected() ? 1 : 0; }

cdv_status cdv_sequence_mu(const cdv_sequence* seq, int* mu, int* case_label) {
  if (!seq) return CDV_E_NULL_ARGUMENT;
  return guarded([&] {
    const int value = cdv::mu(seq->seq);
    const int label = static_cast<int>(cdv::classify(seq->seq));
    if (mu) *mu = value;
    if (case_label) *case_label = label;
  });
}

cdv_status cdv_sequence_info_json(const cdv_sequence* seq, char** out) {
  if (!seq || !out) return CDV_E_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(cdv::io::sequence_info(seq->seq).dump()); });
}

cdv_status cdv_laplacian(const cdv_sequence* seq, cdv_format format, char** out) {
  if (!seq || !out) return CDV_E_NULL_ARGUMENT;
  return guarded([&] {
    const cdv::IntMatrix l = cdv::laplacian(cdv::build_graph(seq->seq));
    switch (format) {
      case CDV_FORMAT_JSON: *out = dup_string(cdv::io::laplacian_json(l).dump() + "\n"); return;
      case CDV_FORMAT_CSV: *out = dup_string(cdv::io::laplacian_csv(l)); return;
      case CDV_FORMAT_PRETTY: *out = dup_string(cdv::io::laplacian_pretty(l)); return;
    }
    throw cdv::Error(cdv::ErrorCode::InvalidArgument, "unknown output format");
  });
}

cdv_status cdv_recognize_edge_list(const char* text, int* is_threshold, char** summary, char** json) {
  if (!text || !is_threshold) return CDV_E_NULL_ARGUMENT;
  return guarded([&] {
    const cdv::Recognition r = cdv::recognize(cdv::parse_edge_list(text));
    *is_threshold = std::holds_alternative<cdv::BuildSequence>(r) ? 1 : 0;
    std::string s = cdv::io::summary(r);
    std::string j = cdv::io::to_json(r).dump();
    if (summary) *summary = dup_string(s);
    if (json) *json = dup_string(j);
  });
}

cdv_status cdv_weights_json(const cdv_sequence* seq, cdv_weight_flavor flavor, char** out) {
  if (!seq || !out) return CDV_E_NULL_ARGUMENT;
  return guarded([&] {
    const cdv::WeightAssignment w = flavor == CDV_WEIGHTS_EDGE ? cdv::edge_weights(seq->seq)
                                                               : cdv::independence_weights(seq->seq);
    *out = dup_string(cdv::io::to_json(w).dump());
  });
}

cdv_status cdv_construct_parametric(const cdv_sequence* seq, const char* alpha1, cdv_matrix** out,
                                    int* non_optimal) {
  if (!seq || !out) return CDV_E_NULL_ARGUMENT;
  return guarded([&] {
    const cdv::ParametricResult r = cdv::construct_parametric(cdv::to_blocks(seq->seq), optional_rational(alpha1));
    auto* m = new cdv_matrix;
    m->doc.matrix = r.matrix;
    m->doc.order = cdv::io::Order::Degree;
    m->doc.method = "parametric";
    m->doc.sequence = seq->seq.to_string();
    m->doc.alpha1 = r.params.alpha1();
    if (non_optimal) *non_optimal = r.non_optimal ? 1 : 0;
    *out = m;
  });
}

cdv_status cdv_construct_recursive(const cdv_sequence* seq, cdv_order order, cdv_matrix** out) {
  if (!seq || !out) return CDV_E_NULL_ARGUMENT;
  return guarded([&] {
    const cdv::RecursiveResult r = cdv::construct_recursive(seq->seq);
    auto* m = new cdv_matrix;
    if (order == CDV_ORDER_DEGREE) {
      m->doc.matrix = cdv::to_degree_order(r.matrix, cdv::build_graph(seq->seq));
      m->doc.order = cdv::io::Order::Degree;
    } else {
      m->doc.matrix = r.matrix;
      m->doc.order = cdv::io::Order::Construction;
    }
    m->doc.method = "recursive";
    m->doc.sequence = seq->seq.to_string();
    *out = m;
  });
}

cdv_status cdv_parametric_symbolic_json(const cdv_sequence* seq, char** out) {
  if (!seq || !out) return CDV_E_NULL_ARGUMENT;
  return guarded([&] {
    auto j = cdv::io::symbolic_json(cdv::symbolic_parametric(cdv::to_blocks(seq->seq)));
    j["method"] = "parametric";
    j["sequence"] = seq->seq.to_string();
    *out = dup_string(j.dump());
  });
}

cdv_status cdv_matrix_from_json(const char* text, cdv_matrix** out) {
  if (!text || !out) return CDV_E_NULL_ARGUMENT;
  return guarded([&] { *out = new cdv_matrix{cdv::io::matrix_from_json(text)}; });
}

cdv_status cdv_matrix_to_json(const cdv_matrix* m, char** out) {
  if (!m || !out) return CDV_E_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(cdv::io::to_json(m->doc).dump()); });
}

size_t cdv_matrix_size(const cdv_matrix* m) { return m ? m->doc.size() : 0; }

int cdv_matrix_is_exact(const cdv_matrix* m) { return m && m->doc.exact() ? 1 : 0; }

cdv_status cdv_matrix_entry(const cdv_matrix* m, size_t row, size_t col, double* out) {
  if (!m || !out) return CDV_E_NULL_ARGUMENT;
  return guarded([&] {
    const std::size_t n = m->doc.size();
    if (row >= n || col >= n) throw cdv::Error(cdv::ErrorCode::DimensionMismatch, "entry index out of range");
    if (const auto* r = std::get_if<cdv::RatMatrix>(&m->doc.matrix)) *out = (*r)(row, col).get_d();
    else *out = std::get<cdv::FloatMatrix>(m->doc.matrix)(row, col);
  });
}

cdv_status cdv_matrix_reorder(const cdv_matrix* m, const cdv_sequence* seq, cdv_order order, cdv_matrix** out) {
  if (!m || !seq || !out) return CDV_E_NULL_ARGUMENT;
  return guarded([&] {
    const cdv::ThresholdGraph g = cdv::build_graph(seq->seq);
    if (m->doc.size() != g.n) throw cdv::Error(cdv::ErrorCode::DimensionMismatch, "matrix and sequence sizes differ");
    const auto target = order == CDV_ORDER_DEGREE ? cdv::io::Order::Degree : cdv::io::Order::Construction;
    auto result = std::make_unique<cdv_matrix>(*m);
    if (m->doc.order != target) {
      const std::vector<int>& p = target == cdv::io::Order::Degree ? g.order : g.perm;
      std::visit([&](const auto& a) { result->doc.matrix = cdv::permute_symmetric(a, p); }, m->doc.matrix);
      result->doc.order = target;
    }
    result->doc.sequence = seq->seq.to_string();
    *out = result.release();
  });
}

void cdv_matrix_free(cdv_matrix* m) { delete m; }

cdv_status cdv_verify(const cdv_matrix* m, const cdv_sequence* graph, cdv_verify_mode mode, int with_bounds,
                      const char* alpha1, cdv_certificate** out) {
  if (!m || !graph || !out) return CDV_E_NULL_ARGUMENT;
  return guarded([&] {
    const cdv::ThresholdGraph g = cdv::build_graph(graph->seq);
    if (m->doc.size() != g.n)
      throw cdv::Error(cdv::ErrorCode::DimensionMismatch, "matrix has " + std::to_string(m->doc.size()) +
                                                              " rows but the graph has " + std::to_string(g.n) +
                                                              " vertices");
    auto* cert = new cdv_certificate;
    std::unique_ptr<cdv_certificate> guard(cert);

    if (const auto* rm = std::get_if<cdv::RatMatrix>(&m->doc.matrix)) {
      const cdv::RatMatrix mat =
          m->doc.order == cdv::io::Order::Construction ? cdv::permute_symmetric(*rm, g.order) : *rm;
      cdv::VerifyOptions options;
      options.mode = mode == CDV_VERIFY_FLOAT ? cdv::VerifyMode::Float : cdv::VerifyMode::Exact;
      if (with_bounds) {
        const cdv::BlockSequence b = cdv::to_blocks(graph->seq);
        std::optional<cdv::Rational> a = optional_rational(alpha1);
        if (!a) a = m->doc.alpha1;
        if (!a) a = cdv::default_alpha1(b);
        options.bounds = std::make_pair(b, cdv::alphas(b, *a));
      }
      cert->cert = cdv::verify(mat, g.adjacency, options);
    } else {
      if (mode == CDV_VERIFY_EXACT)
        throw cdv::Error(cdv::ErrorCode::InvalidArgument, "exact verification needs a rational matrix");
      if (with_bounds)
        throw cdv::Error(cdv::ErrorCode::InvalidArgument, "bounds check needs a rational parametric matrix");
      const auto& fm = std::get<cdv::FloatMatrix>(m->doc.matrix);
      const cdv::FloatMatrix mat =
          m->doc.order == cdv::io::Order::Construction ? cdv::permute_symmetric(fm, g.order) : fm;
      cert->cert = cdv::verify(mat, g.adjacency);
    }
    *out = guard.release();
  });
}

int cdv_certificate_ok(const cdv_certificate* cert) { return cert && cert->cert.all_ok() ? 1 : 0; }

size_t cdv_certificate_corank(const cdv_certificate* cert) { return cert ? cert->cert.corank : 0; }

cdv_status cdv_certificate_inertia(const cdv_certificate* cert, size_t* neg, size_t* zero, size_t* pos) {
  if (!cert) return CDV_E_NULL_ARGUMENT;
  if (neg) *neg = cert->cert.inertia.neg;
  if (zero) *zero = cert->cert.inertia.zero;
  if (pos) *pos = cert->cert.inertia.pos;
  return CDV_OK;
}

cdv_status cdv_certificate_to_json(const cdv_certificate* cert, char** out) {
  if (!cert || !out) return CDV_E_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(cdv::io::to_json(cert->cert).dump()); });
}

void cdv_certificate_free(cdv_certificate* cert) { delete cert; }

cdv_status cdv_bounds_json(const cdv_sequence* seq, const char* alpha1, int* ok, char** out) {
  if (!seq || !out) return CDV_E_NULL_ARGUMENT;
  return guarded([&] {
    const cdv::BlockSequence b = cdv::to_blocks(seq->seq);
    const cdv::ParametricResult r = cdv::construct_parametric(b, optional_rational(alpha1));
    const cdv::SpectralBounds s = cdv::check_spectral_bounds(r.matrix, b, r.params);
    if (ok) *ok = s.ok() ? 1 : 0;
    *out = dup_string(cdv::io::to_json(s, b, r.params).dump());
  });
}

}  // extern "C"

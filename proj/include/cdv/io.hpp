#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "cdv/graph.hpp"
#include "cdv/matrix.hpp"
#include "cdv/parametric.hpp"
#include "cdv/sequence.hpp"
#include "cdv/verify.hpp"

namespace cdv::io {

using nlohmann::json;

/// {"n", "steps", "blocks", "case", "mu", ...}. Disconnected sequences omit
/// the fields that need connectivity.
json sequence_info(const BuildSequence& seq);

json laplacian_json(const IntMatrix& l);
std::string laplacian_csv(const IntMatrix& l);
std::string laplacian_pretty(const IntMatrix& l);

enum class Order { Construction, Degree };
std::string to_string(Order order);

/// A matrix file: {"kind":"rational"|"float", "n", "rows", "order", ...}.
/// Rationals are "p/q" strings, floats are JSON numbers.
struct MatrixDocument {
  std::variant<RatMatrix, FloatMatrix> matrix;
  Order order = Order::Degree;
  std::string method;                // "parametric", "recursive" or empty
  std::string sequence;              // compact step word, when known
  std::optional<Rational> alpha1;    // parametric only

  bool exact() const { return std::holds_alternative<RatMatrix>(matrix); }
  std::size_t size() const;
};

json to_json(const MatrixDocument& doc);
/// Throws Error{Parse} on malformed documents.
MatrixDocument matrix_from_json(std::string_view text);

json symbolic_json(const Matrix<AffineEntry>& m);

json to_json(const CdvCertificate& cert);
json to_json(const SpectralBounds& bounds, const BlockSequence& b, const AlphaParams& params);
json to_json(const WeightAssignment& w);

/// "ciccicc" or "C4: 0 1 2 3".
std::string summary(const Recognition& r);
json to_json(const Recognition& r);

}  // namespace cdv::io

// Command-line front end. Talks to the library only through the C API.
#include <cdv.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(cdv_status s) {
  switch (s) {
    case CDV_E_PARSE:
    case CDV_E_INVALID_ARGUMENT:
    case CDV_E_NOT_CONNECTED:
    case CDV_E_DIMENSION:
    case CDV_E_NULL_ARGUMENT:
      return kExitUsage;
    default:
      return kExitFailed;
  }
}

void check(cdv_status s) {
  if (s != CDV_OK) throw Failure{exit_code_for(s), std::string(cdv_status_name(s)) + ": " + cdv_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { cdv_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <typename T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
using Sequence = std::unique_ptr<cdv_sequence, HandleDeleter<cdv_sequence, cdv_sequence_free>>;
using Matrix = std::unique_ptr<cdv_matrix, HandleDeleter<cdv_matrix, cdv_matrix_free>>;
using Certificate = std::unique_ptr<cdv_certificate, HandleDeleter<cdv_certificate, cdv_certificate_free>>;

Sequence parse(const std::string& text) {
  cdv_sequence* raw = nullptr;
  check(cdv_sequence_parse(text.c_str(), &raw));
  return Sequence(raw);
}

std::string take(char* raw) {
  OwnedString owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kExitUsage, "cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Failure{kExitUsage, "cannot write '" + path + "'"};
  out << text;
}

int cmd_info(const std::string& seq_text, const std::string& format) {
  auto seq = parse(seq_text);
  char* raw = nullptr;
  check(cdv_sequence_info_json(seq.get(), &raw));
  const std::string text = take(raw);
  if (format == "json") {
    std::cout << text << '\n';
    return kExitOk;
  }
  const auto j = nlohmann::json::parse(text);
  for (const auto& [key, value] : j.items()) std::cout << key << ' ' << value.dump() << '\n';
  return kExitOk;
}

int cmd_laplacian(const std::string& seq_text, const std::string& format) {
  auto seq = parse(seq_text);
  const cdv_format f = format == "csv" ? CDV_FORMAT_CSV : format == "pretty" ? CDV_FORMAT_PRETTY : CDV_FORMAT_JSON;
  char* raw = nullptr;
  check(cdv_laplacian(seq.get(), f, &raw));
  std::cout << take(raw);
  return kExitOk;
}

int cmd_mu(const std::string& seq_text) {
  auto seq = parse(seq_text);
  int mu = 0, label = 0;
  check(cdv_sequence_mu(seq.get(), &mu, &label));
  size_t n = 0;
  check(cdv_sequence_counts(seq.get(), &n, nullptr, nullptr, nullptr));
  std::cout << "mu=" << mu << " case=" << label << (n == 1 ? " (convention)" : "") << '\n';
  return kExitOk;
}

int cmd_construct(const std::string& seq_text, const std::string& method, const std::string& alpha1,
                  const std::string& order, bool symbolic, const std::string& out_path) {
  auto seq = parse(seq_text);
  char* raw = nullptr;
  if (method == "parametric") {
    if (symbolic) {
      if (order == "construction") throw Failure{kExitUsage, "symbolic output is in degree order only"};
      check(cdv_parametric_symbolic_json(seq.get(), &raw));
      write_output(take(raw) + "\n", out_path);
      return kExitOk;
    }
    cdv_matrix* m = nullptr;
    int non_optimal = 0;
    check(cdv_construct_parametric(seq.get(), alpha1.empty() ? nullptr : alpha1.c_str(), &m, &non_optimal));
    Matrix owned(m);
    if (non_optimal)
      std::cerr << "warning: case 3 sequence; the parametric matrix has corank c-1, one less than mu\n";
    if (order == "construction") {
      cdv_matrix* reordered = nullptr;
      check(cdv_matrix_reorder(m, seq.get(), CDV_ORDER_CONSTRUCTION, &reordered));
      owned.reset(reordered);
    }
    check(cdv_matrix_to_json(owned.get(), &raw));
  } else {
    if (!alpha1.empty() || symbolic)
      throw Failure{kExitUsage, "--alpha1 and --symbolic apply to the parametric method only"};
    cdv_matrix* m = nullptr;
    check(cdv_construct_recursive(seq.get(), order == "degree" ? CDV_ORDER_DEGREE : CDV_ORDER_CONSTRUCTION, &m));
    Matrix owned(m);
    check(cdv_matrix_to_json(m, &raw));
  }
  write_output(take(raw) + "\n", out_path);
  return kExitOk;
}

int cmd_verify(const std::string& matrix_path, const std::string& graph, bool exact, bool float_mode, bool bounds,
               const std::string& alpha1) {
  const std::string text = read_file(matrix_path);
  cdv_matrix* m = nullptr;
  check(cdv_matrix_from_json(text.c_str(), &m));
  Matrix matrix(m);
  auto seq = parse(graph);
  const cdv_verify_mode mode = exact ? CDV_VERIFY_EXACT : float_mode ? CDV_VERIFY_FLOAT : CDV_VERIFY_AUTO;
  cdv_certificate* c = nullptr;
  check(cdv_verify(matrix.get(), seq.get(), mode, bounds ? 1 : 0, alpha1.empty() ? nullptr : alpha1.c_str(), &c));
  Certificate cert(c);
  char* raw = nullptr;
  check(cdv_certificate_to_json(cert.get(), &raw));
  std::cout << take(raw) << '\n';
  return cdv_certificate_ok(cert.get()) ? kExitOk : kExitFailed;
}

int cmd_recognize(const std::string& edges_path, bool as_json) {
  const std::string text = read_file(edges_path);
  int threshold = 0;
  char* summary = nullptr;
  char* json = nullptr;
  check(cdv_recognize_edge_list(text.c_str(), &threshold, &summary, &json));
  const std::string s = take(summary);
  const std::string j = take(json);
  std::cout << (as_json ? j : s) << '\n';
  return threshold ? kExitOk : kExitFailed;
}

int cmd_weights(const std::string& seq_text, const std::string& flavor) {
  auto seq = parse(seq_text);
  char* raw = nullptr;
  check(cdv_weights_json(seq.get(), flavor == "edge" ? CDV_WEIGHTS_EDGE : CDV_WEIGHTS_INDEPENDENCE, &raw));
  std::cout << take(raw) << '\n';
  return kExitOk;
}

int cmd_bounds(const std::string& seq_text, const std::string& alpha1) {
  auto seq = parse(seq_text);
  int ok = 0;
  char* raw = nullptr;
  check(cdv_bounds_json(seq.get(), alpha1.empty() ? nullptr : alpha1.c_str(), &ok, &raw));
  std::cout << take(raw) << '\n';
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colin de Verdiere matrices for threshold graphs"};
  app.require_subcommand(1);

  std::string seq, format = "json", method, alpha1, order = "degree", out_path, matrix_path, graph, edges,
                   flavor;
  bool symbolic = false, exact = false, float_mode = false, bounds = false, as_json = false;

  auto* info = app.add_subcommand("info", "Counts, blocks, case and mu of a building sequence");
  info->add_option("sequence", seq, "Building or block sequence")->required();
  info->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  auto* lap = app.add_subcommand("laplacian", "Graph Laplacian in degree order");
  lap->add_option("sequence", seq)->required();
  lap->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));

  auto* mu = app.add_subcommand("mu", "Colin de Verdiere parameter");
  mu->add_option("sequence", seq)->required();

  auto* construct = app.add_subcommand("construct", "Emit an optimal CdV matrix as JSON");
  construct->add_option("sequence", seq)->required();
  construct->add_option("--method", method)->required()->check(CLI::IsMember({"parametric", "recursive"}));
  construct->add_option("--alpha1", alpha1, "Free parameter as P/Q (parametric)");
  construct->add_option("--order", order)->check(CLI::IsMember({"construction", "degree"}));
  construct->add_flag("--symbolic", symbolic, "Entries as affine expressions in a (parametric)");
  construct->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "Certify a matrix against a threshold graph");
  verify->add_option("--matrix", matrix_path)->required();
  verify->add_option("--graph", graph)->required();
  auto* exact_flag = verify->add_flag("--exact", exact);
  verify->add_flag("--float", float_mode)->excludes(exact_flag);
  verify->add_flag("--bounds", bounds, "Also check the eigenvalue bounds (parametric matrices)");
  verify->add_option("--alpha1", alpha1);

  auto* recognize = app.add_subcommand("recognize", "Recognize a threshold graph from an edge list");
  recognize->add_option("--edges", edges)->required();
  recognize->add_flag("--json", as_json);

  auto* weights = app.add_subcommand("weights", "Vertex weights realizing the threshold structure");
  weights->add_option("sequence", seq)->required();
  weights->add_option("--flavor", flavor)->required()->check(CLI::IsMember({"edge", "independence"}));

  auto* bnd = app.add_subcommand("bounds", "Eigenvalue bounds of the parametric matrix");
  bnd->add_option("sequence", seq)->required();
  bnd->add_option("--alpha1", alpha1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*info) return cmd_info(seq, format);
    if (*lap) return cmd_laplacian(seq, format);
    if (*mu) return cmd_mu(seq);
    if (*construct) {
      return cmd_construct(seq, method, alpha1, order, symbolic, out_path);
    }
    if (*verify) return cmd_verify(matrix_path, graph, exact, float_mode, bounds, alpha1);
    if (*recognize) return cmd_recognize(edges, as_json);
    if (*weights) return cmd_weights(seq, flavor);
    if (*bnd) return cmd_bounds(seq, alpha1);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  }
  return kExitUsage;
}

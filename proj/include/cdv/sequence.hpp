#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cdv {

enum class Step : std::uint8_t { Cone, Isolate };

/// Construction recipe of a threshold graph: each new vertex is either joined
/// to every earlier vertex (cone) or to none (isolate). The first step is
/// always a cone.
class BuildSequence {
 public:
  /// Throws Error{InvalidArgument} if `steps` is empty or starts with an
  /// isolate.
  explicit BuildSequence(std::vector<Step> steps);

  std::size_t size() const noexcept { return steps_.size(); }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  Step operator[](std::size_t i) const { return steps_[i]; }

  /// A threshold graph is connected iff its last vertex is a cone.
  bool connected() const noexcept { return steps_.back() == Step::Cone; }

  /// Compact "ciccicc" form; parse_sequence() reads it back.
  std::string to_string() const;

  friend bool operator==(const BuildSequence&, const BuildSequence&) = default;

 private:
  std::vector<Step> steps_;
};

/// Run-length form k_1, i_1, ..., k_m, i_m, k_{m+1} of a connected sequence.
struct BlockSequence {
  std::vector<int> cones;     // k_1 .. k_{m+1}
  std::vector<int> isolates;  // i_1 .. i_m

  std::size_t m() const noexcept { return isolates.size(); }
  /// Interleaved list as written: k1,i1,...,k_{m+1}.
  std::vector<int> interleaved() const;

  friend bool operator==(const BlockSequence&, const BlockSequence&) = default;
};

struct SequenceCounts {
  std::size_t n = 0;
  std::size_t cones = 0;  // also the k of the parametric construction
  std::size_t isolates = 0;
  std::size_t isolate_blocks = 0;  // m
};

enum class CaseLabel { Case1 = 1, Case2 = 2, Case3 = 3 };

/// Accepts either a word over {c, i, cone, isolate} (whitespace or comma
/// separated, or run together as "ciccicc"), or an odd-length comma-separated
/// block list "k1,i1,...,k_{m+1}" of positive integers.
BuildSequence parse_sequence(std::string_view text);

/// Throws Error{NotConnected} if the sequence ends with an isolate.
BlockSequence to_blocks(const BuildSequence& seq);
/// Throws Error{InvalidArgument} on a non-positive entry or a block count
/// mismatch (needs one more cone block than isolate blocks).
BuildSequence from_blocks(const BlockSequence& blocks);
void validate(const BlockSequence& blocks);

SequenceCounts counts(const BuildSequence& seq);

/// Case 1: "cone, cone, ...", Case 2: "cone, isolate, cone, ...",
/// Case 3: "cone, isolate, isolate, ...". A single vertex is Case 1.
CaseLabel classify(const BuildSequence& seq);

/// Colin de Verdiere parameter of a connected threshold graph: c - 1 in
/// cases 1 and 2, c in case 3. K_1 is assigned 0 by convention.
int mu(const BuildSequence& seq);

/// mu of the star K_{1,q}: 1 for q <= 2, 2 for q >= 3.
int mu_star(int q);

}  // namespace cdv

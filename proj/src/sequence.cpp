#include "cdv/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "cdv/error.hpp"

namespace cdv {
namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) != 0;
  });
}

bool looks_numeric(const std::string& s) {
  return all_digits(s) || (s.size() > 1 && (s[0] == '-' || s[0] == '+') && all_digits(s.substr(1)));
}

}  // namespace

BuildSequence::BuildSequence(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty())
    throw Error(ErrorCode::InvalidArgument, "building sequence is empty");
  if (steps_.front() != Step::Cone)
    throw Error(ErrorCode::InvalidArgument, "building sequence must start with a cone");
}

std::string BuildSequence::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(s == Step::Cone ? 'c' : 'i');
  return out;
}

std::vector<int> BlockSequence::interleaved() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < cones.size(); ++j) {
    out.push_back(cones[j]);
    if (j < isolates.size()) out.push_back(isolates[j]);
  }
  return out;
}

BuildSequence parse_sequence(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw Error(ErrorCode::Parse, "empty sequence");

  const bool numeric = looks_numeric(tokens.front());
  if (numeric) {
    std::vector<int> entries;
    for (const auto& tok : tokens) {
      if (!looks_numeric(tok))
        throw Error(ErrorCode::Parse, "mixed block list and step words: '" + tok + "'");
      int v = 0;
      const char* first = tok.data() + (tok[0] == '+' ? 1 : 0);
      auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw Error(ErrorCode::Parse, "bad block entry '" + tok + "'");
      if (v <= 0) throw Error(ErrorCode::Parse, "block entries must be positive, got " + tok);
      entries.push_back(v);
    }
    if (entries.size() % 2 == 0)
      throw Error(ErrorCode::Parse, "block list must have odd length (start and end with cone blocks)");
    BlockSequence b;
    for (std::size_t j = 0; j < entries.size(); ++j)
      (j % 2 == 0 ? b.cones : b.isolates).push_back(entries[j]);
    return from_blocks(b);
  }

  std::vector<Step> steps;
  for (const auto& tok : tokens) {
    if (tok == "cone") {
      steps.push_back(Step::Cone);
    } else if (tok == "isolate") {
      steps.push_back(Step::Isolate);
    } else if (tok.find_first_not_of("ci") == std::string::npos) {
      for (char ch : tok) steps.push_back(ch == 'c' ? Step::Cone : Step::Isolate);
    } else {
      throw Error(ErrorCode::Parse, "unknown step '" + tok + "'");
    }
  }
  if (steps.front() != Step::Cone)
    throw Error(ErrorCode::Parse, "building sequence must start with a cone");
  return BuildSequence(std::move(steps));
}

BlockSequence to_blocks(const BuildSequence& seq) {
  if (!seq.connected())
    throw Error(ErrorCode::NotConnected, "sequence '" + seq.to_string() + "' is not connected");
  BlockSequence b;
  std::size_t j = 0;
  while (j < seq.size()) {
    const Step kind = seq[j];
    int run = 0;
    while (j < seq.size() && seq[j] == kind) {
      ++run;
      ++j;
    }
    (kind == Step::Cone ? b.cones : b.isolates).push_back(run);
  }
  return b;
}

void validate(const BlockSequence& b) {
  if (b.cones.size() != b.isolates.size() + 1)
    throw Error(ErrorCode::InvalidArgument, "block sequence needs exactly one more cone block than isolate blocks");
  auto positive = [](int v) { return v > 0; };
  if (!std::all_of(b.cones.begin(), b.cones.end(), positive) ||
      !std::all_of(b.isolates.begin(), b.isolates.end(), positive))
    throw Error(ErrorCode::InvalidArgument, "block entries must be positive");
}

BuildSequence from_blocks(const BlockSequence& b) {
  validate(b);
  std::vector<Step> steps;
  for (std::size_t j = 0; j < b.cones.size(); ++j) {
    steps.insert(steps.end(), static_cast<std::size_t>(b.cones[j]), Step::Cone);
    if (j < b.isolates.size())
      steps.insert(steps.end(), static_cast<std::size_t>(b.isolates[j]), Step::Isolate);
  }
  return BuildSequence(std::move(steps));
}

SequenceCounts counts(const BuildSequence& seq) {
  SequenceCounts c;
  c.n = seq.size();
  for (std::size_t j = 0; j < seq.size(); ++j) {
    if (seq[j] == Step::Cone) {
      ++c.cones;
    } else {
      ++c.isolates;
      if (seq[j - 1] == Step::Cone) ++c.isolate_blocks;
    }
  }
  return c;
}

CaseLabel classify(const BuildSequence& seq) {
  if (!seq.connected())
    throw Error(ErrorCode::NotConnected, "sequence '" + seq.to_string() + "' is not connected");
  if (seq.size() == 1 || seq[1] == Step::Cone) return CaseLabel::Case1;
  // seq[1] is an isolate, so a connected sequence has at least three steps.
  return seq[2] == Step::Cone ? CaseLabel::Case2 : CaseLabel::Case3;
}

int mu(const BuildSequence& seq) {
  const CaseLabel label = classify(seq);
  if (seq.size() == 1) return 0;
  const int c = static_cast<int>(counts(seq).cones);
  return label == CaseLabel::Case3 ? c : c - 1;
}

int mu_star(int q) {
  if (q < 1) throw Error(ErrorCode::InvalidArgument, "star needs at least one leaf");
  return q <= 2 ? 1 : 2;
}

}  // namespace cdv

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cdv {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (gmpxx canonicalizes after every arithmetic operation).
using Rational = mpq_class;

/// Parses "p/q" or an integer literal. Throws Error{Parse} on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace cdv

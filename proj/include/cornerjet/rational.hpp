#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cornerjet {

/// Exact arbitrary-precision rational. Every coefficient in the exact engine is one of these.
using Rational = mpq_class;

/// Default truncation order for jets and parsed tensors.
inline constexpr int kDefaultOrder = 16;

/// Builds num/den in canonical form.
Rational make_rational(long num, long den = 1);

/// "3", "-1/2": the shortest human form.
std::string to_string(const Rational& q);

/// Always "num/den", e.g. "3/1". Used by the JSON schema.
std::string to_fraction_string(const Rational& q);

/// Parses "n", "-n" or "n/d" (no whitespace). Throws std::invalid_argument on anything else.
Rational parse_fraction(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }

} // namespace cornerjet

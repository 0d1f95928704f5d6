#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kirwanlab {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator).
using Rational = mpq_class;

/// Serializes as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses the "p/q" | "p" grammar (optional leading '-', decimal digits,
/// nonzero denominator). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Decimal rendering with `digits` fractional digits, for human output only.
std::string to_decimal(const Rational& r, int digits);

}  // namespace kirwanlab

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bsfan {

/// Exact coefficient field. Values are kept canonical (lowest terms).
using Rational = mpq_class;
using Integer = mpz_class;

/// "num" or "num/den", lowest terms, sign on the numerator.
std::string to_string(const Rational& r);

/// Parses "a" or "a/b" with optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace bsfan

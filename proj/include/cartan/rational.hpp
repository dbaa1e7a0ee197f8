#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cartan {

/// Exact rational coefficients. Always canonicalized (lowest terms, positive denominator).
using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise. Never a decimal.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace cartan

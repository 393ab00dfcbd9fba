#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace linkage_kit {

// Exact arbitrary-precision rational. Values are always kept canonical
// (reduced, positive denominator).
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses "p", "-p" or "p/q" with optional surrounding whitespace. The result is
// reduced, so "4/6" parses to 2/3. Throws Error{InvalidRational} on a zero
// denominator or any other malformed input.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form; integers print without a denominator.
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

// Lexicographic three-way comparison by value.
std::strong_ordering compare(const RationalVector& lhs, const RationalVector& rhs);

// Comma-separated canonical rendering, e.g. "(0,-3/2)".
std::string format_vector(const RationalVector& values);

}  // namespace linkage_kit

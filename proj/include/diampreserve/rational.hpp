#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

namespace diampreserve {

using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading '-'); the result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& value);

/// Exact binary value of a finite double.
Rational rational_from_double(double value);

inline double to_double(const Rational& value) { return value.get_d(); }

/// Exact square root when `value` is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

/// Uniform p/q with |p| <= max_numerator and 1 <= q <= max_denominator.
Rational random_rational(std::mt19937_64& rng, long max_numerator, long max_denominator);

/// Uniform p/q strictly inside (0, 1).
Rational random_unit_interior(std::mt19937_64& rng, long max_denominator);

}  // namespace diampreserve

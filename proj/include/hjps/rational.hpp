#pragma once

#include <gmpxx.h>

#include <string>

namespace hjps {

// Exact rational scalar. mpq_class keeps values canonical (positive
// denominator, reduced fraction, zero stored as 0/1) provided every
// constructed value is canonicalized, which the helpers below guarantee.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "p" or "p/q" with an optional leading '-'; q must be positive.
// Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace hjps

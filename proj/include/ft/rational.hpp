#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ft {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" with decimal digits of arbitrary length and an
/// optional leading '-' on the numerator. The denominator must be positive.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string to_string(const Rational& value);

std::string to_string(const Integer& value);

} // namespace ft

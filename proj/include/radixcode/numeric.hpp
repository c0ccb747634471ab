#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace radixcode {

// Unbounded integers and exact rationals. Rationals are kept canonical
// (lowest terms, positive denominator); construct them through make_rational
// or parse_rational so the invariant holds everywhere.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Parses "p/q" or a bare integer "p". Throws SyntaxError on malformed input.
Rational parse_rational(std::string_view text);

/// Parses a decimal integer (optional leading sign). Throws SyntaxError.
Integer parse_integer(std::string_view text);

Integer pow_integer(const Integer& base, unsigned long exponent);

/// Floor of num/den as an Integer; den must be positive.
Integer floor_quotient(const Integer& num, const Integer& den);

/// Integer part of a non-negative rational, rounded toward zero.
Integer floor_rational(const Rational& value);

}  // namespace radixcode

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <radixcode/number_system.hpp>
#include <radixcode/numeric.hpp>

namespace radixcode {

enum class ExpansionStatus { Terminated, Truncated };

/// A signed number in an extended system: integer digits plus fractional
/// digits, where frac_digits[i] is the coefficient of 1/weight(i+1) and is
/// bounded by alpha(i). Terminated means the remainder reached exactly zero,
/// so the stored digits reproduce the value exactly.
struct ExtendedExpansion {
  Sign sign = Sign::Plus;
  DigitSequence integer_part;
  std::vector<Integer> frac_digits;
  ExpansionStatus status = ExpansionStatus::Terminated;

  /// For decimal-sourced expansions: how many fractional digits the input
  /// precision certifies in this system.
  std::optional<std::size_t> certified;

  bool terminated() const { return status == ExpansionStatus::Terminated; }
};

/// Expands a rational: integer part by successive division, fractional part
/// by the multiply-by-beta-and-take-integer-part recurrence. Stops early with
/// status Terminated when the remainder hits zero, otherwise emits max_digits
/// fractional digits and reports Truncated.
ExtendedExpansion expand_rational(const NumberSystem& system, const Rational& value,
                                  std::size_t max_digits);

/// Exact value of a stored expansion:
/// sign * (decode(integer_part) + sum frac_digits[i]/weight(i+1)).
Rational value_of(const NumberSystem& system, const ExtendedExpansion& expansion);

/// Least place n with denominator(value) dividing weight(n), found by
/// stripping gcd(denominator, beta(i)) factors place by place. Searches at
/// most 2*denominator places (a finite system is capped at its length) and
/// returns nullopt when the expansion cannot terminate.
std::optional<std::size_t> terminating_place(const NumberSystem& system,
                                             const Rational& value);

inline bool is_terminating(const NumberSystem& system, const Rational& value) {
  return terminating_place(system, value).has_value();
}

/// The dual, nonterminating expansion of 1/weight(place): zero digits up to
/// the place, then maximal digits alpha(i) from there on. Returns the first
/// `count` maximal digits (so the fractional vector has place+count entries),
/// whose partial sum is exactly 1/weight(place) - 1/weight(place+count).
ExtendedExpansion nonterminating_form(const NumberSystem& system, std::size_t place,
                                      std::size_t count);

/// A finite-precision decimal literal: value = sign * scaled / 10^precision.
struct DecimalLiteral {
  Sign sign = Sign::Plus;
  Integer scaled;
  unsigned long precision = 0;

  Rational value() const;
};

/// Parses "sign? digits ('.' digits)?". Throws SyntaxError with byte offset.
DecimalLiteral parse_decimal(std::string_view text);

/// Expands the exact rational named by a decimal string. A fractional digit
/// at place k is only certified when weight(k+1) <= 10^precision; the
/// expansion never emits an uncertified digit and throws PrecisionExhausted
/// if one would be needed before max_digits or termination. The result's
/// `certified` field reports how many digits the input precision could
/// certify in total.
ExtendedExpansion expand_decimal(const NumberSystem& system, std::string_view decimal,
                                 std::size_t max_digits);

/// Renders an expansion with format_digits.
std::string format_expansion(const ExtendedExpansion& expansion, bool compact = false);

}  // namespace radixcode

#include <radixcode/rational.hpp>

#include <cstddef>

#include <radixcode/errors.hpp>

namespace radixcode {

namespace {

// Emits fractional digits of `frac` in [0,1) by the multiply-floor
// recurrence, writing into `expansion` and setting its status: Terminated
// when the remainder hit exactly zero within max_digits places.
// `certified_limit`, when set, is the number of places the caller may emit
// before the digits stop being certified; reaching it alive throws.
void expand_fraction(const NumberSystem& system, Rational frac,
                     std::size_t max_digits, ExtendedExpansion& expansion,
                     const std::optional<std::size_t>& certified_limit) {
  for (std::size_t place = 0;; ++place) {
    if (frac == 0) {
      expansion.status = ExpansionStatus::Terminated;
      return;
    }
    if (place == max_digits) {
      expansion.status = ExpansionStatus::Truncated;
      return;
    }
    if (certified_limit && place >= *certified_limit) {
      throw PrecisionExhausted(
          "input precision certifies only " + std::to_string(*certified_limit) +
          " fractional digits here");
    }
    if (system.finite() && place >= system.length()) {
      throw CapacityExceeded("fraction does not terminate within " +
                             std::to_string(system.length()) + " places");
    }
    frac *= system.beta(place);
    Integer digit = floor_rational(frac);
    expansion.frac_digits.push_back(digit);
    frac -= Rational(digit);
  }
}

}  // namespace

ExtendedExpansion expand_rational(const NumberSystem& system, const Rational& value,
                                  std::size_t max_digits) {
  if (max_digits < 1) {
    throw Error("max_digits must be at least 1");
  }
  ExtendedExpansion out;
  Rational magnitude = value;
  if (value < 0) {
    out.sign = Sign::Minus;
    magnitude = -magnitude;
  }
  Integer whole = floor_rational(magnitude);
  out.integer_part = encode_integer(system, whole);
  expand_fraction(system, magnitude - Rational(whole), max_digits, out, std::nullopt);
  return out;
}

Rational value_of(const NumberSystem& system, const ExtendedExpansion& expansion) {
  Rational frac = 0;
  for (std::size_t k = expansion.frac_digits.size(); k-- > 0;) {
    frac += Rational(expansion.frac_digits[k]);
    frac /= Rational(system.beta(k));
  }
  Rational total = Rational(decode_integer(system, expansion.integer_part)) + frac;
  if (expansion.sign == Sign::Minus) {
    total = -total;
  }
  return total;
}

std::optional<std::size_t> terminating_place(const NumberSystem& system,
                                             const Rational& value) {
  Integer remaining = abs(value.get_den());
  const Integer bound = 2 * remaining;
  Integer steps = 0;
  std::size_t place = 0;
  while (steps <= bound) {
    if (remaining == 1) {
      return place;
    }
    if (system.finite() && place >= system.length()) {
      return std::nullopt;
    }
    Integer g = gcd(remaining, system.beta(place));
    if (g == 1 && system.kind() == SystemKind::Fixed) {
      // Constant radix: no later place can help either.
      return std::nullopt;
    }
    remaining /= g;
    ++place;
    ++steps;
  }
  return std::nullopt;
}

ExtendedExpansion nonterminating_form(const NumberSystem& system, std::size_t place,
                                      std::size_t count) {
  if (place < 1 || count < 1) {
    throw Error("nonterminating_form needs place >= 1 and count >= 1");
  }
  ExtendedExpansion out;
  out.status = ExpansionStatus::Truncated;
  out.frac_digits.assign(place, Integer(0));
  for (std::size_t i = place; i < place + count; ++i) {
    out.frac_digits.push_back(system.alpha(i));
  }
  return out;
}

Rational DecimalLiteral::value() const {
  Rational magnitude = make_rational(scaled, pow_integer(10, precision));
  return sign == Sign::Minus ? -magnitude : magnitude;
}

DecimalLiteral parse_decimal(std::string_view text) {
  DecimalLiteral out;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    out.sign = text[pos] == '-' ? Sign::Minus : Sign::Plus;
    ++pos;
  }
  std::string digits;
  std::size_t int_digits = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    digits += text[pos];
    ++pos;
    ++int_digits;
  }
  if (int_digits == 0) {
    throw SyntaxError("expected decimal digits", pos);
  }
  out.precision = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t frac_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      digits += text[pos];
      ++pos;
    }
    if (pos == frac_start) {
      throw SyntaxError("expected digits after radix point", pos);
    }
    out.precision = static_cast<unsigned long>(pos - frac_start);
  }
  if (pos != text.size()) {
    throw SyntaxError("unexpected character in decimal literal", pos);
  }
  out.scaled = Integer(digits, 10);
  return out;
}

ExtendedExpansion expand_decimal(const NumberSystem& system, std::string_view decimal,
                                 std::size_t max_digits) {
  DecimalLiteral literal = parse_decimal(decimal);
  const Integer scale = pow_integer(10, literal.precision);

  // A digit at place k is certified only while weight(k+1) <= 10^precision:
  // its place value must stay at or above the resolution of the input.
  std::size_t certified = 0;
  {
    Integer w = system.weight(1);
    while (w <= scale) {
      ++certified;
      if (system.finite() && certified >= system.length()) break;
      w *= system.beta(certified);
    }
  }

  ExtendedExpansion out;
  out.sign = literal.sign;
  out.certified = certified;
  Rational magnitude = make_rational(literal.scaled, scale);
  Integer whole = floor_rational(magnitude);
  out.integer_part = encode_integer(system, whole);
  expand_fraction(system, magnitude - Rational(whole), max_digits, out, certified);
  return out;
}

std::string format_expansion(const ExtendedExpansion& expansion, bool compact) {
  return format_digits(expansion.sign, expansion.integer_part, expansion.frac_digits,
                       compact);
}

}  // namespace radixcode

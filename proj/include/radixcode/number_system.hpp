#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <radixcode/errors.hpp>
#include <radixcode/numeric.hpp>

namespace radixcode {

enum class SystemKind { Fixed, Factorial, Hyperoctahedral, CustomAlpha };

/// A positional number system given by its digit bounds alpha(i): place i
/// accepts digits 0..alpha(i), the radix at place i is beta(i) = 1 + alpha(i),
/// and the place weights satisfy weight(0) = 1, weight(i+1) = weight(i)*beta(i).
///
/// Every alpha(i) must be >= 1, which is exactly the condition for each
/// non-negative integer to have a unique digit representation.
///
/// Instances are immutable; all member functions are pure and safe to call
/// concurrently from any number of threads.
class NumberSystem {
 public:
  /// Constant radix m >= 2 (alpha_i = m-1): ordinary base-m numerals.
  static NumberSystem fixed(const Integer& base);

  /// alpha_i = i+1, weight(i) = (i+1)!  — the factorial system.
  static NumberSystem factorial();

  /// alpha_i = 2i+1, weight(i) = 2^i i!  — the hyperoctahedral system.
  static NumberSystem hyperoctahedral();

  /// Finite system from an explicit alpha list; every entry must be >= 1.
  static NumberSystem custom(std::vector<Integer> alphas);

  SystemKind kind() const { return kind_; }

  /// True for CustomAlpha systems, which define finitely many places.
  bool finite() const { return kind_ == SystemKind::CustomAlpha; }

  /// Number of places for a finite system.
  std::size_t length() const { return alphas_.size(); }

  /// Maximal digit at place i. For finite systems i must be < length().
  Integer alpha(std::size_t i) const;

  /// Radix at place i: alpha(i) + 1.
  Integer beta(std::size_t i) const;

  /// Place weight U_i. For finite systems defined for 0 <= i <= length().
  Integer weight(std::size_t i) const;

  /// CLI descriptor: "fixed:<m>", "factorial", "hyperoctahedral", "alpha:a0,a1,...".
  std::string descriptor() const;

  bool operator==(const NumberSystem& other) const = default;

 private:
  NumberSystem(SystemKind kind, Integer fixed_base, std::vector<Integer> alphas)
      : kind_(kind), fixed_base_(std::move(fixed_base)), alphas_(std::move(alphas)) {}

  SystemKind kind_;
  Integer fixed_base_;           // Fixed only
  std::vector<Integer> alphas_;  // CustomAlpha only
};

/// Parses a system descriptor string (same grammar as descriptor()).
NumberSystem parse_system(std::string_view text);

/// Little-endian digit vector: digits()[0] multiplies weight(0). Always kept
/// canonical: no most-significant zeros, and the value zero is exactly {0}.
class DigitSequence {
 public:
  DigitSequence() : digits_{Integer(0)} {}

  /// Canonicalizes: strips most-significant zeros (keeps one digit for zero).
  explicit DigitSequence(std::vector<Integer> little_endian);

  const std::vector<Integer>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  const Integer& operator[](std::size_t i) const { return digits_[i]; }
  bool is_zero() const { return digits_.size() == 1 && digits_[0] == 0; }

  /// True when every digit is within its place bound for the given system.
  bool valid_for(const NumberSystem& system) const;

  bool operator==(const DigitSequence& other) const = default;

 private:
  std::vector<Integer> digits_;
};

/// Digit expansion of a non-negative integer by successive division by the
/// place radixes. Throws CapacityExceeded when a finite system is too short.
DigitSequence encode_integer(const NumberSystem& system, const Integer& value);

/// Value of a digit sequence: sum of digits[i] * weight(i). Throws
/// DigitOutOfRange when a digit exceeds its place bound.
Integer decode_integer(const NumberSystem& system, const DigitSequence& digits);

enum class Sign { Plus, Minus };

struct ParsedNumber {
  Sign sign = Sign::Plus;
  DigitSequence integer_part;
  std::vector<Integer> frac_digits;  // frac_digits[i] multiplies 1/weight(i+1)
};

/// Parses "sign? places ('.' places)?" where places is ':'-separated decimal
/// digit groups, most significant first. A string without any colon is read
/// one character per digit ("1331" == "1:3:3:1"). Throws SyntaxError with the
/// byte offset of the first offending character.
ParsedNumber parse_digits(std::string_view text);

/// Formats digits most significant first, ':'-separated, with '.' before the
/// fractional part. With compact=true, emits the colon-free one-character-per-
/// digit form instead when every digit is <= 9 (falls back to colons otherwise).
std::string format_digits(Sign sign, const DigitSequence& integer_part,
                          const std::vector<Integer>& frac_digits = {},
                          bool compact = false);

}  // namespace radixcode

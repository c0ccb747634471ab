#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radixcode {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A digit bound violates the system condition (some alpha_i < 1, or a fixed base < 2).
class InvalidAlpha : public Error {
 public:
  using Error::Error;
};

/// A finite system is too short to represent the requested value or place.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

/// A digit exceeds the maximal digit of its place.
class DigitOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; carries the byte offset of the offending character.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class NotASignedPermutation : public Error {
 public:
  using Error::Error;
};

class NotAPermutation : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class RankOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A decimal input does not carry enough precision for the requested digits.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// An enumeration request exceeds the configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownCheck : public Error {
 public:
  using Error::Error;
};

}  // namespace radixcode

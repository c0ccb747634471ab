#include <radixcode/numeric.hpp>

#include <cstddef>

#include <radixcode/errors.hpp>

namespace radixcode {

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw Error("rational with zero denominator");
  }
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Integer parse_integer(std::string_view text) {
  if (text.empty()) {
    throw SyntaxError("expected an integer", 0);
  }
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') {
    ++pos;
  }
  if (pos == text.size()) {
    throw SyntaxError("expected digits after sign", pos);
  }
  for (std::size_t k = pos; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw SyntaxError("invalid character in integer", k);
    }
  }
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (den_text.empty()) {
    throw SyntaxError("expected denominator after '/'", slash + 1);
  }
  Integer den;
  try {
    den = parse_integer(den_text);
  } catch (const SyntaxError& e) {
    throw SyntaxError("invalid denominator", slash + 1 + e.offset());
  }
  if (den == 0) {
    throw SyntaxError("zero denominator", slash + 1);
  }
  return make_rational(num, den);
}

Integer pow_integer(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Integer floor_quotient(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer floor_rational(const Rational& value) {
  return floor_quotient(value.get_num(), value.get_den());
}

}  // namespace radixcode

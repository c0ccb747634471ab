#include <radixcode/number_system.hpp>

#include <algorithm>
#include <cstddef>
#include <utility>

namespace radixcode {

NumberSystem NumberSystem::fixed(const Integer& base) {
  if (base < 2) {
    throw InvalidAlpha("fixed base must be at least 2");
  }
  return NumberSystem(SystemKind::Fixed, base, {});
}

NumberSystem NumberSystem::factorial() {
  return NumberSystem(SystemKind::Factorial, 0, {});
}

NumberSystem NumberSystem::hyperoctahedral() {
  return NumberSystem(SystemKind::Hyperoctahedral, 0, {});
}

NumberSystem NumberSystem::custom(std::vector<Integer> alphas) {
  if (alphas.empty()) {
    throw InvalidAlpha("alpha list must be nonempty");
  }
  for (const Integer& a : alphas) {
    if (a < 1) {
      throw InvalidAlpha("every alpha must be at least 1");
    }
  }
  return NumberSystem(SystemKind::CustomAlpha, 0, std::move(alphas));
}

Integer NumberSystem::alpha(std::size_t i) const {
  switch (kind_) {
    case SystemKind::Fixed:
      return fixed_base_ - 1;
    case SystemKind::Factorial:
      return Integer(static_cast<unsigned long>(i) + 1);
    case SystemKind::Hyperoctahedral:
      return Integer(2 * static_cast<unsigned long>(i) + 1);
    case SystemKind::CustomAlpha:
      if (i >= alphas_.size()) {
        throw CapacityExceeded("place beyond the end of a finite system");
      }
      return alphas_[i];
  }
  throw Error("unreachable");
}

Integer NumberSystem::beta(std::size_t i) const { return alpha(i) + 1; }

Integer NumberSystem::weight(std::size_t i) const {
  if (finite() && i > alphas_.size()) {
    throw CapacityExceeded("weight beyond the end of a finite system");
  }
  Integer w = 1;
  for (std::size_t k = 0; k < i; ++k) {
    w *= beta(k);
  }
  return w;
}

std::string NumberSystem::descriptor() const {
  switch (kind_) {
    case SystemKind::Fixed:
      return "fixed:" + fixed_base_.get_str();
    case SystemKind::Factorial:
      return "factorial";
    case SystemKind::Hyperoctahedral:
      return "hyperoctahedral";
    case SystemKind::CustomAlpha: {
      std::string out = "alpha:";
      for (std::size_t i = 0; i < alphas_.size(); ++i) {
        if (i > 0) out += ',';
        out += alphas_[i].get_str();
      }
      return out;
    }
  }
  throw Error("unreachable");
}

NumberSystem parse_system(std::string_view text) {
  if (text == "factorial") {
    return NumberSystem::factorial();
  }
  if (text == "hyperoctahedral") {
    return NumberSystem::hyperoctahedral();
  }
  constexpr std::string_view kFixed = "fixed:";
  if (text.substr(0, kFixed.size()) == kFixed) {
    return NumberSystem::fixed(parse_integer(text.substr(kFixed.size())));
  }
  constexpr std::string_view kAlpha = "alpha:";
  if (text.substr(0, kAlpha.size()) == kAlpha) {
    std::string_view rest = text.substr(kAlpha.size());
    std::vector<Integer> alphas;
    while (!rest.empty()) {
      std::size_t comma = rest.find(',');
      alphas.push_back(parse_integer(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
      if (rest.empty()) {
        throw SyntaxError("trailing comma in alpha list", text.size());
      }
    }
    if (alphas.empty()) {
      throw SyntaxError("empty alpha list", kAlpha.size());
    }
    return NumberSystem::custom(std::move(alphas));
  }
  throw SyntaxError("unknown system descriptor '" + std::string(text) + "'", 0);
}

DigitSequence::DigitSequence(std::vector<Integer> little_endian)
    : digits_(std::move(little_endian)) {
  while (digits_.size() > 1 && digits_.back() == 0) {
    digits_.pop_back();
  }
  if (digits_.empty()) {
    digits_.push_back(Integer(0));
  }
}

bool DigitSequence::valid_for(const NumberSystem& system) const {
  if (system.finite() && digits_.size() > system.length() && !is_zero()) {
    return false;
  }
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] < 0 || digits_[i] > system.alpha(i)) {
      return false;
    }
  }
  return true;
}

DigitSequence encode_integer(const NumberSystem& system, const Integer& value) {
  if (value < 0) {
    throw Error("encode_integer takes a non-negative value");
  }
  if (value == 0) {
    return DigitSequence();
  }
  std::vector<Integer> digits;
  Integer q = value;
  std::size_t place = 0;
  while (q != 0) {
    if (system.finite() && place >= system.length()) {
      throw CapacityExceeded("value does not fit in " +
                             std::to_string(system.length()) + " places");
    }
    Integer b = system.beta(place);
    Integer next, digit;
    mpz_fdiv_qr(next.get_mpz_t(), digit.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t());
    digits.push_back(digit);
    q = next;
    ++place;
  }
  return DigitSequence(std::move(digits));
}

Integer decode_integer(const NumberSystem& system, const DigitSequence& digits) {
  const auto& d = digits.digits();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) {
      throw DigitOutOfRange("negative digit at place " + std::to_string(i));
    }
    if (system.finite() && i >= system.length()) {
      if (d[i] != 0) {
        throw CapacityExceeded("digit at place " + std::to_string(i) +
                               " beyond the end of a finite system");
      }
      continue;
    }
    if (d[i] > system.alpha(i)) {
      throw DigitOutOfRange("digit " + d[i].get_str() + " at place " +
                            std::to_string(i) + " exceeds " +
                            system.alpha(i).get_str());
    }
  }
  Integer value = 0;
  for (std::size_t k = d.size(); k-- > 0;) {
    value *= system.beta(k);
    value += d[k];
  }
  return value;
}

namespace {

// Splits one side of the radix point into digit values, most significant
// first. `colon_form` is decided once for the whole input string.
std::vector<Integer> parse_places(std::string_view text, std::size_t base_offset,
                                  bool colon_form) {
  std::vector<Integer> groups;
  if (text.empty()) {
    throw SyntaxError("expected digits", base_offset);
  }
  if (colon_form) {
    std::size_t start = 0;
    while (true) {
      std::size_t colon = text.find(':', start);
      std::string_view group =
          text.substr(start, colon == std::string_view::npos ? colon : colon - start);
      if (group.empty()) {
        throw SyntaxError("empty digit group", base_offset + start);
      }
      for (std::size_t k = 0; k < group.size(); ++k) {
        if (group[k] < '0' || group[k] > '9') {
          throw SyntaxError("invalid character in digit group",
                            base_offset + start + k);
        }
      }
      groups.emplace_back(std::string(group), 10);
      if (colon == std::string_view::npos) break;
      start = colon + 1;
    }
  } else {
    for (std::size_t k = 0; k < text.size(); ++k) {
      if (text[k] < '0' || text[k] > '9') {
        throw SyntaxError("invalid character in digit string", base_offset + k);
      }
      groups.emplace_back(static_cast<unsigned long>(text[k] - '0'));
    }
  }
  return groups;
}

}  // namespace

ParsedNumber parse_digits(std::string_view text) {
  ParsedNumber result;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    result.sign = text[pos] == '-' ? Sign::Minus : Sign::Plus;
    ++pos;
  }
  std::string_view body = text.substr(pos);
  if (body.empty()) {
    throw SyntaxError("expected digits", pos);
  }
  std::size_t dot = body.find('.');
  if (dot != std::string_view::npos &&
      body.find('.', dot + 1) != std::string_view::npos) {
    throw SyntaxError("more than one radix point", pos + body.find('.', dot + 1));
  }
  bool colon_form = body.find(':') != std::string_view::npos;

  std::string_view int_text = dot == std::string_view::npos ? body : body.substr(0, dot);
  std::vector<Integer> int_groups = parse_places(int_text, pos, colon_form);
  std::reverse(int_groups.begin(), int_groups.end());
  result.integer_part = DigitSequence(std::move(int_groups));

  if (dot != std::string_view::npos) {
    std::string_view frac_text = body.substr(dot + 1);
    result.frac_digits = parse_places(frac_text, pos + dot + 1, colon_form);
  }
  return result;
}

std::string format_digits(Sign sign, const DigitSequence& integer_part,
                          const std::vector<Integer>& frac_digits, bool compact) {
  if (compact) {
    auto single = [](const Integer& d) { return d >= 0 && d <= 9; };
    compact = std::all_of(integer_part.digits().begin(), integer_part.digits().end(),
                          single) &&
              std::all_of(frac_digits.begin(), frac_digits.end(), single);
  }
  std::string out;
  if (sign == Sign::Minus) {
    out += '-';
  }
  const auto& d = integer_part.digits();
  for (std::size_t k = d.size(); k-- > 0;) {
    out += d[k].get_str();
    if (!compact && k > 0) out += ':';
  }
  if (!frac_digits.empty()) {
    out += '.';
    for (std::size_t k = 0; k < frac_digits.size(); ++k) {
      if (!compact && k > 0) out += ':';
      out += frac_digits[k].get_str();
    }
  }
  return out;
}

}  // namespace radixcode

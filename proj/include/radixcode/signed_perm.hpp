#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <radixcode/errors.hpp>

namespace radixcode {

/// A signed permutation of {1..n} in window notation: image(i) is a signed
/// integer whose absolute values run over {1..n} exactly once. Acts on R^n by
/// permuting and flipping coordinates. Immutable after construction.
class SignedPermutation {
 public:
  static SignedPermutation identity(int n);

  /// Validates window notation; throws NotASignedPermutation.
  static SignedPermutation from_images(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }

  /// pi(i), 1-based.
  int image(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }

  const std::vector<int>& images() const { return images_; }

  bool operator==(const SignedPermutation& other) const = default;
  auto operator<=>(const SignedPermutation& other) const = default;

 private:
  explicit SignedPermutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// (sigma ∘ tau)(i) = sigma(tau(i)), with sigma(-k) = -sigma(k).
SignedPermutation compose(const SignedPermutation& sigma, const SignedPermutation& tau);

SignedPermutation inverse(const SignedPermutation& pi);

/// A root of the rank-n type-B root system: sign * e_i (Single),
/// sign * (e_i + e_j) (Sum) or sign * (e_i - e_j) (Diff), stored with i < j.
struct Root {
  enum class Kind { Single, Sum, Diff };

  Kind kind = Kind::Single;
  int sign = 1;  // +1 or -1
  int i = 1;
  int j = 0;  // pair kinds only

  static Root single(int sign, int i);
  static Root sum(int sign, int i, int j);
  static Root diff(int sign, int i, int j);

  bool positive() const { return sign > 0; }
  Root negated() const;

  /// Largest coordinate index used.
  int max_index() const { return kind == Kind::Single ? i : j; }

  bool operator==(const Root& other) const = default;
  auto operator<=>(const Root& other) const = default;
};

std::string to_string(const Root& root);

/// The n^2 positive roots: e_k for k in [n], e_i + e_j and e_i - e_j for i < j <= n.
std::vector<Root> positive_roots(int n);

/// The slice of positive roots whose lowest coordinate is i:
/// { e_i } ∪ { e_i + e_j, e_i - e_j : i < j <= n }, of size 2(n-i)+1.
std::vector<Root> positive_roots_at(int n, int i);

/// Image of a root under the permutation's linear action, re-canonicalized.
Root act_on_root(const SignedPermutation& pi, const Root& root);

/// Parses "-2,-1" or "[-2,-1]" window notation; throws NotASignedPermutation
/// or SyntaxError.
SignedPermutation parse_window(std::string_view text);

/// Comma-separated window notation, e.g. "-2,-1".
std::string format_window(const SignedPermutation& pi);

}  // namespace radixcode

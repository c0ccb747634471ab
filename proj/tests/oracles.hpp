// Independent reference implementations used only by tests. These take the
// opposite route from the library (top-down greedy division instead of
// bottom-up remainders, explicit matrices instead of window arithmetic) so
// agreement is meaningful.
#pragma once

#include <cstdlib>
#include <vector>

#include <radixcode/number_system.hpp>
#include <radixcode/signed_perm.hpp>

namespace oracles {

/// Digit expansion by greedy division from the most significant place down.
inline radixcode::DigitSequence greedy_digits(const radixcode::NumberSystem& system,
                                              const radixcode::Integer& value) {
  if (value == 0) {
    return radixcode::DigitSequence();
  }
  std::size_t top = 0;
  while ((!system.finite() || top + 1 <= system.length()) &&
         system.weight(top + 1) <= value) {
    ++top;
  }
  std::vector<radixcode::Integer> digits(top + 1);
  radixcode::Integer rest = value;
  for (std::size_t k = top + 1; k-- > 0;) {
    radixcode::Integer w = system.weight(k);
    digits[k] = rest / w;
    rest -= digits[k] * w;
  }
  return radixcode::DigitSequence(std::move(digits));
}

/// Column k holds the coordinates of the image of the k-th basis vector.
using Matrix = std::vector<std::vector<int>>;

inline Matrix matrix_of(const radixcode::SignedPermutation& pi) {
  const int n = pi.size();
  Matrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 1; i <= n; ++i) {
    int v = pi.image(i);
    m[static_cast<std::size_t>(std::abs(v)) - 1][static_cast<std::size_t>(i) - 1] =
        v > 0 ? 1 : -1;
  }
  return m;
}

inline Matrix matrix_product(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<int>(n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      int sum = 0;
      for (std::size_t k = 0; k < n; ++k) {
        sum += a[r][k] * b[k][c];
      }
      out[r][c] = sum;
    }
  }
  return out;
}

inline std::vector<int> coordinates(const radixcode::Root& root, int n) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(root.i) - 1] += root.sign;
  if (root.kind == radixcode::Root::Kind::Sum) {
    v[static_cast<std::size_t>(root.j) - 1] += root.sign;
  } else if (root.kind == radixcode::Root::Kind::Diff) {
    v[static_cast<std::size_t>(root.j) - 1] -= root.sign;
  }
  return v;
}

inline std::vector<int> apply_matrix(const Matrix& m, const std::vector<int>& v) {
  const std::size_t n = m.size();
  std::vector<int> out(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      out[r] += m[r][k] * v[k];
    }
  }
  return out;
}

/// Inversion pairs of a plain permutation, counted directly.
inline int inversion_pairs(const std::vector<int>& perm) {
  int count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) {
        ++count;
      }
    }
  }
  return count;
}

}  // namespace oracles

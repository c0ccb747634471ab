#include <radixcode/inversion.hpp>

#include <cstdlib>

namespace radixcode {

int inversions_via_roots(const SignedPermutation& pi) {
  int count = 0;
  for (const Root& v : positive_roots(pi.size())) {
    if (!act_on_root(pi, v).positive()) {
      ++count;
    }
  }
  return count;
}

int inversions_at_via_roots(const SignedPermutation& pi, int i) {
  if (i < 1 || i > pi.size()) {
    throw IndexOutOfRange("position out of range");
  }
  int count = 0;
  for (const Root& v : positive_roots_at(pi.size(), i)) {
    if (!act_on_root(pi, v).positive()) {
      ++count;
    }
  }
  return count;
}

int inversions_at(const SignedPermutation& pi, int i) {
  const int n = pi.size();
  if (i < 1 || i > n) {
    throw IndexOutOfRange("position out of range");
  }
  const int v = pi.image(i);
  const int j = std::abs(v);
  int smaller_later = 0;
  int larger_later = 0;
  for (int k = i + 1; k <= n; ++k) {
    int a = std::abs(pi.image(k));
    if (a < j) {
      ++smaller_later;
    } else if (a > j) {
      ++larger_later;
    }
  }
  return v > 0 ? smaller_later : 1 + smaller_later + 2 * larger_later;
}

int inversions(const SignedPermutation& pi) {
  int total = 0;
  for (int i = 1; i <= pi.size(); ++i) {
    total += inversions_at(pi, i);
  }
  return total;
}

InversionVector inversion_vector(const SignedPermutation& pi) {
  InversionVector entries(static_cast<std::size_t>(pi.size()));
  for (int i = 1; i <= pi.size(); ++i) {
    entries[static_cast<std::size_t>(i) - 1] = inversions_at(pi, i);
  }
  return entries;
}

std::vector<int> lehmer_code(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  if (n < 1) {
    throw NotAPermutation("permutation must be nonempty");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw NotAPermutation("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<int> code(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (int k = i + 1; k < n; ++k) {
      if (perm[static_cast<std::size_t>(k)] < perm[static_cast<std::size_t>(i)]) {
        ++count;
      }
    }
    code[static_cast<std::size_t>(i)] = count;
  }
  return code;
}

}  // namespace radixcode

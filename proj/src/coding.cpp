#include <radixcode/coding.hpp>

#include <algorithm>
#include <cstdlib>

#include <radixcode/number_system.hpp>

namespace radixcode {

namespace {

Integer group_order(int n) {
  // 2^n n!
  Integer order = 1;
  for (int k = 1; k <= n; ++k) {
    order *= 2 * k;
  }
  return order;
}

Integer factorial_of(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) {
    f *= k;
  }
  return f;
}

}  // namespace

Rank rank_hyperoctahedral(const SignedPermutation& pi) {
  const int n = pi.size();
  // Digits little-endian: place k holds the statistic of position n-k, so the
  // position-1 statistic lands at the most significant place. Equivalent to
  // decode_integer over the hyperoctahedral system on the reversed vector.
  InversionVector stats = inversion_vector(pi);
  Integer value = 0;
  Integer weight = 1;
  for (int k = 0; k < n; ++k) {
    value += stats[static_cast<std::size_t>(n - 1 - k)] * weight;
    weight *= 2 * (k + 1);
  }
  return Rank{value, n, RankFamily::Hyperoctahedral};
}

SignedPermutation unrank_hyperoctahedral(const Integer& value, int n) {
  if (n < 1) {
    throw RankOutOfRange("rank needs n >= 1");
  }
  if (value < 0 || value >= group_order(n)) {
    throw RankOutOfRange("rank " + value.get_str() + " outside 0..2^n n!-1");
  }
  // Little-endian hyperoctahedral digits of the value.
  std::vector<long> digits(static_cast<std::size_t>(n), 0);
  Integer q = value;
  for (int k = 0; k < n; ++k) {
    Integer b = 2 * (k + 1);
    Integer digit = q % b;
    digits[static_cast<std::size_t>(k)] = digit.get_si();
    q /= b;
  }
  std::vector<int> unused(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    unused[static_cast<std::size_t>(v) - 1] = v;
  }
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const long c = digits[static_cast<std::size_t>(n - i)];
    const long m = static_cast<long>(unused.size());
    int chosen;
    if (c <= m - 1) {
      chosen = unused[static_cast<std::size_t>(c)];
      images.push_back(chosen);
    } else {
      chosen = unused[static_cast<std::size_t>(2 * m - 1 - c)];
      images.push_back(-chosen);
    }
    unused.erase(std::find(unused.begin(), unused.end(), chosen));
  }
  return SignedPermutation::from_images(std::move(images));
}

SignedPermutation unrank_hyperoctahedral(const Rank& rank) {
  if (rank.family != RankFamily::Hyperoctahedral) {
    throw RankOutOfRange("rank belongs to the symmetric family");
  }
  return unrank_hyperoctahedral(rank.value, rank.n);
}

Rank rank_symmetric(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> code = lehmer_code(perm);
  Integer value = 0;
  Integer weight = 1;
  // code[i-1] multiplies (n-i)!; accumulate from the least significant end.
  for (int k = 0; k < n; ++k) {
    value += code[static_cast<std::size_t>(n - 1 - k)] * weight;
    weight *= k + 1;
  }
  return Rank{value, n, RankFamily::Symmetric};
}

std::vector<int> unrank_symmetric(const Integer& value, int n) {
  if (n < 1) {
    throw RankOutOfRange("rank needs n >= 1");
  }
  if (value < 0 || value >= factorial_of(n)) {
    throw RankOutOfRange("rank " + value.get_str() + " outside 0..n!-1");
  }
  // Little-endian factorial digits; digit k (weight (k+1)!) is the code entry
  // of position n-1-k, and position n always has code 0.
  std::vector<long> code(static_cast<std::size_t>(n), 0);
  Integer q = value;
  for (int k = 0; k + 1 < n; ++k) {
    Integer b = k + 2;
    Integer digit = q % b;
    code[static_cast<std::size_t>(n - 2 - k)] = digit.get_si();
    q /= b;
  }
  std::vector<int> unused(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    unused[static_cast<std::size_t>(v) - 1] = v;
  }
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto it = unused.begin() + code[static_cast<std::size_t>(i)];
    perm.push_back(*it);
    unused.erase(it);
  }
  return perm;
}

std::vector<int> unrank_symmetric(const Rank& rank) {
  if (rank.family != RankFamily::Symmetric) {
    throw RankOutOfRange("rank belongs to the hyperoctahedral family");
  }
  return unrank_symmetric(rank.value, rank.n);
}

SignedPermutation drop_first_column(const SignedPermutation& pi) {
  const int n = pi.size();
  if (n < 2) {
    throw DimensionMismatch("cannot reduce a rank-1 element");
  }
  const int pivot = std::abs(pi.image(1));
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n) - 1);
  for (int k = 2; k <= n; ++k) {
    int v = pi.image(k);
    int a = std::abs(v);
    if (a > pivot) {
      --a;
    }
    images.push_back(v > 0 ? a : -a);
  }
  return SignedPermutation::from_images(std::move(images));
}

}  // namespace radixcode

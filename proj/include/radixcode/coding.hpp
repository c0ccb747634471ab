#pragma once

#include <vector>

#include <radixcode/inversion.hpp>
#include <radixcode/numeric.hpp>
#include <radixcode/signed_perm.hpp>

namespace radixcode {

enum class RankFamily { Symmetric, Hyperoctahedral };

/// A position in the enumeration of a group: Symmetric ranks lie in [0, n!),
/// Hyperoctahedral ranks in [0, 2^n n!).
struct Rank {
  Integer value;
  int n = 0;
  RankFamily family = RankFamily::Hyperoctahedral;

  bool operator==(const Rank& other) const = default;
};

/// Rank of a signed permutation: the inversion vector read as digits of the
/// hyperoctahedral system, with the position-1 statistic at the most
/// significant place (weight 2^(n-1)(n-1)!) and the position-n statistic at
/// the least significant place.
Rank rank_hyperoctahedral(const SignedPermutation& pi);

/// Inverse of rank_hyperoctahedral. Reads the hyperoctahedral digits of the
/// value most significant first; at each position the digit c selects from
/// the sorted list R of unused absolute values (|R| = m): c <= m-1 picks
/// +R[c], c >= m picks -R[2m-1-c]. Throws RankOutOfRange.
SignedPermutation unrank_hyperoctahedral(const Integer& value, int n);
SignedPermutation unrank_hyperoctahedral(const Rank& rank);

/// Rank of a plain permutation: its Lehmer code read as digits of the
/// factorial system (code[0] at the most significant place, weight (n-1)!).
Rank rank_symmetric(const std::vector<int>& perm);

/// Inverse of rank_symmetric; throws RankOutOfRange.
std::vector<int> unrank_symmetric(const Integer& value, int n);
std::vector<int> unrank_symmetric(const Rank& rank);

/// Drops window position 1 and renormalizes the remaining images onto
/// {1..n-1}: absolute values above |pi(1)| shift down by one, signs kept.
/// The result's rank equals rank(pi) modulo 2^(n-1)(n-1)!.
SignedPermutation drop_first_column(const SignedPermutation& pi);

}  // namespace radixcode

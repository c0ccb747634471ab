#pragma once

#include <vector>

#include <radixcode/signed_perm.hpp>

namespace radixcode {

/// entries[i-1] = inversions attributed to position i; each entry lies in
/// [0, 2(n-i)+1] and the entries sum to the total inversion count.
using InversionVector = std::vector<int>;

/// Total inversions by root counting: positive roots sent negative by pi.
int inversions_via_roots(const SignedPermutation& pi);

/// Position-i inversions by root counting over the slice of positive roots
/// at i. 1 <= i <= n, else IndexOutOfRange.
int inversions_at_via_roots(const SignedPermutation& pi, int i);

/// Position-i inversions by the closed-form scan: with pi(i) = +j it counts
/// later positions with smaller absolute image; with pi(i) = -j it is
/// 1 + (smaller later) + 2*(larger later). Production path, O(n) per call.
int inversions_at(const SignedPermutation& pi, int i);

/// Total inversions (sum of the closed forms).
int inversions(const SignedPermutation& pi);

InversionVector inversion_vector(const SignedPermutation& pi);

/// Lehmer code of a plain permutation of {1..n}: code[i-1] counts later
/// entries smaller than entry i. Throws NotAPermutation.
std::vector<int> lehmer_code(const std::vector<int>& perm);

}  // namespace radixcode

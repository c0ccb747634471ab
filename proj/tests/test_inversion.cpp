#include <doctest.h>

#include <map>
#include <numeric>
#include <vector>

#include <radixcode/inversion.hpp>
#include <radixcode/verify.hpp>

#include "oracles.hpp"

using namespace radixcode;

TEST_SUITE("inversion") {

TEST_CASE("statistics of the eight rank-2 elements") {
  for (const Table2Row& row : table2_rows()) {
    SignedPermutation pi = SignedPermutation::from_images({row.window[0], row.window[1]});
    CHECK(inversions_at(pi, 1) == row.inv1);
    CHECK(inversions_at(pi, 2) == row.inv2);
    CHECK(inversions_at_via_roots(pi, 1) == row.inv1);
    CHECK(inversions_at_via_roots(pi, 2) == row.inv2);
  }
}

TEST_CASE("total inversion reference values") {
  CHECK(inversions(SignedPermutation::identity(4)) == 0);
  CHECK(inversions_via_roots(SignedPermutation::identity(4)) == 0);
  CHECK(inversions(SignedPermutation::from_images({-1, -2})) == 4);
  // The element negating everything realizes the maximum n^2.
  CHECK(inversions(SignedPermutation::from_images({-1, -2, -3})) == 9);
  CHECK(inversions_via_roots(SignedPermutation::from_images({-1, -2, -3})) == 9);
}

TEST_CASE("position statistics reference values") {
  CHECK(inversions_at(SignedPermutation::from_images({1, -2}), 2) == 1);
  CHECK(inversions_at(SignedPermutation::from_images({-2, -1}), 1) == 2);
  CHECK(inversions_at(SignedPermutation::from_images({-2, 1}), 1) == 2);
  CHECK(inversions_at(SignedPermutation::from_images({-1, 2}), 1) == 3);
  for (int i = 1; i <= 4; ++i) {
    CHECK(inversions_at(SignedPermutation::identity(4), i) == 0);
  }
  // The last position contributes nothing when it keeps its value.
  CHECK(inversions_at(SignedPermutation::from_images({2, 1, 3}), 3) == 0);
}

TEST_CASE("vector reference values") {
  CHECK(inversion_vector(SignedPermutation::from_images({-2, -1})) ==
        InversionVector{2, 1});
  CHECK(inversion_vector(SignedPermutation::identity(4)) ==
        InversionVector{0, 0, 0, 0});
  CHECK(inversion_vector(SignedPermutation::from_images({-1, -2, -3})) ==
        InversionVector{5, 3, 1});
}

TEST_CASE("closed form equals root counting exhaustively") {
  for (int n = 1; n <= 3; ++n) {
    for (const SignedPermutation& pi : enumerate_group(n)) {
      for (int i = 1; i <= n; ++i) {
        CHECK(inversions_at(pi, i) == inversions_at_via_roots(pi, i));
      }
    }
  }
}

TEST_CASE("position statistics decompose the total") {
  for (int n = 1; n <= 3; ++n) {
    for (const SignedPermutation& pi : enumerate_group(n)) {
      InversionVector v = inversion_vector(pi);
      CHECK(std::accumulate(v.begin(), v.end(), 0) == inversions_via_roots(pi));
      for (int i = 1; i <= n; ++i) {
        CHECK(v[static_cast<std::size_t>(i - 1)] >= 0);
        CHECK(v[static_cast<std::size_t>(i - 1)] <= 2 * (n - i) + 1);
      }
    }
  }
}

TEST_CASE("first-position statistic depends only on the first image") {
  for (int n = 1; n <= 4; ++n) {
    for (const SignedPermutation& pi : enumerate_group(n)) {
      int j = std::abs(pi.image(1));
      int expected = pi.image(1) > 0 ? j - 1 : 2 * n - j;
      CHECK(inversions_at(pi, 1) == expected);
    }
  }
}

TEST_CASE("first-position statistic covers 0..2n-1 with uniform multiplicity") {
  for (int n = 1; n <= 5; ++n) {
    std::map<int, int> counts;
    for (const SignedPermutation& pi : enumerate_group(n)) {
      ++counts[inversions_at(pi, 1)];
    }
    CHECK(counts.size() == 2 * static_cast<std::size_t>(n));
    int per_value = -1;
    for (int v = 0; v < 2 * n; ++v) {
      REQUIRE(counts.count(v) == 1);
      if (per_value < 0) per_value = counts[v];
      CHECK(counts[v] == per_value);
    }
  }
}

TEST_CASE("position index validation") {
  SignedPermutation pi = SignedPermutation::identity(3);
  CHECK_THROWS_AS(inversions_at(pi, 0), IndexOutOfRange);
  CHECK_THROWS_AS(inversions_at(pi, 4), IndexOutOfRange);
  CHECK_THROWS_AS(inversions_at_via_roots(pi, 4), IndexOutOfRange);
}

TEST_CASE("lehmer code reference values") {
  CHECK(lehmer_code({1, 2, 3, 4}) == std::vector<int>{0, 0, 0, 0});
  CHECK(lehmer_code({4, 3, 2, 1}) == std::vector<int>{3, 2, 1, 0});
  CHECK(lehmer_code({2, 4, 1, 3}) == std::vector<int>{1, 2, 0, 0});
  CHECK_THROWS_AS(lehmer_code({1, 1}), NotAPermutation);
  CHECK_THROWS_AS(lehmer_code({2}), NotAPermutation);
  CHECK_THROWS_AS(lehmer_code({}), NotAPermutation);
  CHECK_THROWS_AS(lehmer_code({1, 3}), NotAPermutation);
}

TEST_CASE("lehmer code entry bounds and sum") {
  std::vector<int> perm(5);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<int> code = lehmer_code(perm);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      CHECK(code[i] >= 0);
      CHECK(code[i] <= static_cast<int>(perm.size() - 1 - i));
    }
    CHECK(std::accumulate(code.begin(), code.end(), 0) ==
          oracles::inversion_pairs(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // TEST_SUITE

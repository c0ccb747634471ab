#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include <radixcode/coding.hpp>
#include <radixcode/number_system.hpp>
#include <radixcode/verify.hpp>

using namespace radixcode;

TEST_SUITE("coding") {

TEST_CASE("rank reference values") {
  CHECK(rank_hyperoctahedral(SignedPermutation::from_images({-2, -1})).value == 5);
  CHECK(rank_hyperoctahedral(SignedPermutation::identity(4)).value == 0);
  CHECK(rank_hyperoctahedral(SignedPermutation::from_images({-1})).value == 1);
  CHECK(rank_hyperoctahedral(SignedPermutation::from_images({-1, -2, -3})).value == 47);
}

TEST_CASE("rank equals the decoded reversed inversion vector") {
  NumberSystem hyp = NumberSystem::hyperoctahedral();
  for (const SignedPermutation& pi : enumerate_group(3)) {
    InversionVector stats = inversion_vector(pi);
    std::vector<Integer> digits;
    for (std::size_t k = stats.size(); k-- > 0;) {
      digits.emplace_back(stats[k]);
    }
    CHECK(rank_hyperoctahedral(pi).value ==
          decode_integer(hyp, DigitSequence(std::move(digits))));
  }
}

TEST_CASE("unrank reference values") {
  CHECK(unrank_hyperoctahedral(Integer(5), 2) ==
        SignedPermutation::from_images({-2, -1}));
  CHECK(unrank_hyperoctahedral(Integer(0), 4) == SignedPermutation::identity(4));
  for (int n = 1; n <= 4; ++n) {
    Integer order = 1;
    std::vector<int> all_negative;
    for (int k = 1; k <= n; ++k) {
      order *= 2 * k;
      all_negative.push_back(-k);
    }
    CHECK(unrank_hyperoctahedral(order - 1, n) ==
          SignedPermutation::from_images(all_negative));
  }
}

TEST_CASE("rank range validation") {
  CHECK_THROWS_AS(unrank_hyperoctahedral(Integer(-1), 2), RankOutOfRange);
  CHECK_THROWS_AS(unrank_hyperoctahedral(Integer(8), 2), RankOutOfRange);
  CHECK_THROWS_AS(unrank_hyperoctahedral(Integer(0), 0), RankOutOfRange);
  CHECK_THROWS_AS(unrank_symmetric(Integer(24), 4), RankOutOfRange);
  CHECK_THROWS_AS(unrank_symmetric(Integer(-1), 4), RankOutOfRange);
}

TEST_CASE("rank and unrank are mutually inverse") {
  for (int n = 1; n <= 4; ++n) {
    Integer order = 1;
    for (int k = 1; k <= n; ++k) order *= 2 * k;
    std::vector<Integer> seen;
    for (const SignedPermutation& pi : enumerate_group(n)) {
      Rank r = rank_hyperoctahedral(pi);
      CHECK(r.value >= 0);
      CHECK(r.value < order);
      CHECK(unrank_hyperoctahedral(r) == pi);
      seen.push_back(r.value);
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i) {
      CHECK(seen[i] == Integer(static_cast<unsigned long>(i)));
    }
  }
}

TEST_CASE("family tags are enforced") {
  Rank r = rank_hyperoctahedral(SignedPermutation::from_images({-2, -1}));
  CHECK(r.family == RankFamily::Hyperoctahedral);
  CHECK(r.n == 2);
  CHECK_THROWS_AS(unrank_symmetric(r), RankOutOfRange);
  Rank s = rank_symmetric({2, 1});
  CHECK_THROWS_AS(unrank_hyperoctahedral(s), RankOutOfRange);
}

TEST_CASE("symmetric rank reference values") {
  CHECK(rank_symmetric({1, 2, 3, 4}).value == 0);
  CHECK(rank_symmetric({4, 3, 2, 1}).value == 23);
  CHECK(rank_symmetric({2, 4, 1, 3}).value == 10);
  CHECK(unrank_symmetric(Integer(10), 4) == std::vector<int>{2, 4, 1, 3});
  CHECK(unrank_symmetric(Integer(0), 4) == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(rank_symmetric({1, 1}), NotAPermutation);
}

TEST_CASE("symmetric rank is a bijection onto 0..n!-1") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Integer> seen;
    do {
      Rank r = rank_symmetric(perm);
      CHECK(unrank_symmetric(r.value, n) == perm);
      seen.push_back(r.value);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i) {
      CHECK(seen[i] == Integer(static_cast<unsigned long>(i)));
    }
  }
}

TEST_CASE("dropping the first column") {
  CHECK(drop_first_column(SignedPermutation::from_images({-2, -1})) ==
        SignedPermutation::from_images({-1}));
  CHECK(drop_first_column(SignedPermutation::identity(4)) ==
        SignedPermutation::identity(3));
  CHECK(drop_first_column(SignedPermutation::from_images({3, -1, 2})) ==
        SignedPermutation::from_images({-1, 2}));
  CHECK_THROWS_AS(drop_first_column(SignedPermutation::from_images({-1})),
                  DimensionMismatch);
}

TEST_CASE("reduction keeps the low digits of the rank") {
  for (int n = 1; n <= 3; ++n) {
    Integer order = 1;
    for (int k = 1; k <= n; ++k) order *= 2 * k;
    for (const SignedPermutation& pi : enumerate_group(n + 1)) {
      CHECK(rank_hyperoctahedral(drop_first_column(pi)).value ==
            rank_hyperoctahedral(pi).value % order);
    }
  }
}

}  // TEST_SUITE

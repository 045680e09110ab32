#include <stdexcept>

#include "doctest.h"
#include "suncs/combinat.hpp"

using namespace suncs;

TEST_CASE("binomial and multichoose") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(multichoose(3, 2) == 6);
  CHECK(multichoose(2, 4) == 5);
  CHECK(multichoose(5, 0) == 1);
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(factorial_d(12) == doctest::Approx(479001600.0));
}

TEST_CASE("sorted subsets are lexicographic") {
  const auto s32 = sorted_subsets(3, 2);
  REQUIRE(s32.size() == 3);
  CHECK(s32[0] == std::vector<int>{1, 2});
  CHECK(s32[1] == std::vector<int>{1, 3});
  CHECK(s32[2] == std::vector<int>{2, 3});
  CHECK(sorted_subsets(2, 1).size() == 2);
  CHECK(sorted_subsets(4, 3).size() == 4);
  CHECK(sorted_subsets(5, 0).size() == 1);
}

TEST_CASE("permutations with sign") {
  const auto p2 = permutations_with_sign(2);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].first == std::vector<int>{0, 1});
  CHECK(p2[0].second == 1);
  CHECK(p2[1].first == std::vector<int>{1, 0});
  CHECK(p2[1].second == -1);

  const auto p3 = permutations_with_sign(3);
  REQUIRE(p3.size() == 6);
  int even = 0, odd = 0;
  for (const auto& [p, s] : p3) (s > 0 ? even : odd)++;
  CHECK(even == 3);
  CHECK(odd == 3);

  const auto p0 = permutations_with_sign(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].second == 1);

  CHECK_THROWS_WITH_AS(permutations_with_sign(11), "permutation group too large",
                       std::runtime_error);
}

TEST_CASE("sort_with_sign counts transpositions") {
  std::vector<int> a{3, 1, 2};
  CHECK(sort_with_sign(a) == 1);  // two transpositions
  CHECK(a == std::vector<int>{1, 2, 3});

  std::vector<int> b{2, 1};
  CHECK(sort_with_sign(b) == -1);

  std::vector<int> c{1, 3, 3};
  CHECK(sort_with_sign(c) == 0);

  std::vector<int> d{};
  CHECK(sort_with_sign(d) == 1);
}

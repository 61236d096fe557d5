#include "doctest.h"
#include "reference_oracles.hpp"
#include "setchroma/combinatorics.hpp"
#include "setchroma/errors.hpp"

using namespace setchroma;

TEST_CASE("binomial: small values and out-of-range indices") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), DomainError);
}

TEST_CASE("binomial: C(20,10) agrees with Pascal's recurrence") {
  const auto pascal = testing::pascal_triangle(20);
  REQUIRE(pascal[20][10] == 184756);
  CHECK(binomial(20, 10) == 184756);
}

TEST_CASE("binomial: whole triangle and symmetry up to 30") {
  const auto pascal = testing::pascal_triangle(30);
  for (int n = 0; n <= 30; ++n) {
    const auto row = binomial_row(n);
    for (int j = 0; j <= n; ++j) {
      CHECK(binomial(n, j) == pascal[n][j]);
      CHECK(binomial(n, j) == binomial(n, n - j));
      CHECK(row[j] == pascal[n][j]);
    }
  }
}

TEST_CASE("gaussian_binomial: frozen brute-force subspace counts") {
  REQUIRE(testing::count_subspaces(4, 2, 2) == 35);
  REQUIRE(testing::count_subspaces(2, 1, 3) == 4);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(2, 1, 3) == 4);
  CHECK(gaussian_binomial(7, 0, 5) == 1);
  CHECK(gaussian_binomial(3, 4, 2) == 0);
  CHECK(gaussian_binomial(3, -1, 2) == 0);
}

TEST_CASE("gaussian_binomial: matches subspace enumeration for q in {2,3}, k <= 4") {
  for (int q : {2, 3}) {
    for (int k = 0; k <= 4; ++k) {
      for (int j = 0; j <= k; ++j) {
        CAPTURE(q);
        CAPTURE(k);
        CAPTURE(j);
        CHECK(gaussian_binomial(k, j, q) == testing::count_subspaces(k, j, q));
      }
    }
  }
}

TEST_CASE("gaussian_binomial: domain errors") {
  CHECK_THROWS_AS(gaussian_binomial(3, 1, 1), DomainError);
  CHECK_THROWS_AS(gaussian_binomial(3, 1, 0), DomainError);
  CHECK_THROWS_AS(gaussian_binomial(-1, 0, 2), DomainError);
}

TEST_CASE("franel: direct values") {
  CHECK(franel(5, 1) == 32);
  CHECK(franel(2, 3) == 10);   // 1 + 8 + 1
  CHECK(franel(4, 3) == 346);  // 1 + 64 + 216 + 64 + 1
  for (int r = 0; r <= 5; ++r) CHECK(franel(0, r) == 1);
}

TEST_CASE("franel: closed forms for r <= 2") {
  for (int k = 0; k <= 30; ++k) {
    CHECK(franel(k, 0) == k + 1);
    CHECK(franel(k, 1) == pow2(k));
    CHECK(franel(k, 2) == binomial(2 * k, k));
  }
}

TEST_CASE("factorial, pow2 and Bell numbers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(pow2(64) == BigCount("18446744073709551616"));
  const std::uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597};
  for (int n = 0; n <= 12; ++n) CHECK(bell_number_saturating(n) == bell[n]);
  CHECK(bell_number_saturating(200) == UINT64_MAX);
}

#include <random>

#include "doctest.h"
#include "reference_oracles.hpp"
#include "setchroma/combinatorics.hpp"
#include "setchroma/errors.hpp"
#include "setchroma/genfunc.hpp"

using namespace setchroma;

namespace {

std::vector<BigCount> big(std::initializer_list<long long> xs) {
  std::vector<BigCount> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

std::vector<BigCount> coeffs(const CoefficientPolynomial& p) {
  return {p.coefficients().begin(), p.coefficients().end()};
}

}  // namespace

TEST_CASE("product_linear_factors: small products") {
  CHECK(coeffs(product_linear_factors(WeightSequence{})) == big({1}));
  CHECK(coeffs(product_linear_factors(WeightSequence{1, 1})) == big({1, 2, 1}));
  CHECK(coeffs(product_linear_factors(WeightSequence{1, 2, 1})) == big({1, 4, 5, 2}));
  // zero weights are identity factors
  CHECK(coeffs(product_linear_factors(WeightSequence{0, 3, 0})) == big({1, 3}));
  CHECK(product_linear_factors(WeightSequence{0, 0}) == CoefficientPolynomial::one());
}

TEST_CASE("product_linear_factors: coefficients are elementary symmetric polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t len = rng() % 7;
    std::vector<BigCount> alpha;
    for (std::size_t j = 0; j < len; ++j) alpha.emplace_back(static_cast<long long>(rng() % 11) - 3);
    const auto poly = product_linear_factors(WeightSequence(alpha));
    for (int n = 0; n <= static_cast<int>(len) + 1; ++n) {
      CHECK(poly.coefficient(static_cast<std::size_t>(n)) == testing::elementary_symmetric(alpha, n));
    }
  }
}

TEST_CASE("CoefficientPolynomial keeps trailing coefficient nonzero") {
  CoefficientPolynomial p(big({3, 0, 0}));
  CHECK(p.degree() == 0);
  CHECK(p.coefficient(5) == 0);
  CoefficientPolynomial zero(big({}));
  CHECK(zero.degree() == 0);
  CHECK(zero.coefficient(0) == 0);
}

TEST_CASE("urn_counts: published table columns") {
  CHECK(urn_counts(2, 5) == big({1, 4, 10, 12, 0, 0}));
  CHECK(urn_counts(4, 5)[5] == 11520);
  CHECK(urn_counts(7, 8)[8] == BigCount("1067311728000"));
  for (int k = 0; k <= 10; ++k) CHECK(urn_counts(k, k + 2)[k + 2] == 0);
  for (int k = 0; k <= 7; ++k) {
    const auto col = urn_counts(k, 9);
    for (int n = 0; n <= 9; ++n) CHECK(to_decimal(col[n]) == testing::kUrnTable[n][k]);
  }
}

TEST_CASE("urn_counts: top entry is (k+1)! times the product of the binomial row") {
  for (int k = 0; k <= 8; ++k) {
    BigCount expected = factorial(k + 1);
    for (int j = 0; j <= k; ++j) expected *= binomial(k, j);
    CHECK(urn_counts(k, k + 1)[k + 1] == expected);
  }
}

TEST_CASE("urn_counts: weakly increasing up to n = k+1") {
  for (int k = 0; k <= 12; ++k) {
    const auto col = urn_counts(k, k + 1);
    for (int n = 0; n <= k; ++n) CHECK(col[n] <= col[n + 1]);
  }
  // equality occurs, so the inequality cannot be strict
  CHECK(urn_counts(1, 2)[1] == urn_counts(1, 2)[2]);
}

TEST_CASE("weighted_injective_counts") {
  CHECK(weighted_injective_counts(WeightSequence{1, 1, 1}, 2)[2] == 6);
  CHECK(weighted_injective_counts(WeightSequence{1, 2, 1}, 3)[3] == 12);
  const auto single = weighted_injective_counts(WeightSequence{9}, 2);
  CHECK(single[1] == 9);
  CHECK(single[2] == 0);
  CHECK_THROWS_AS(weighted_injective_counts(WeightSequence{1}, -1), DomainError);
}

TEST_CASE("is_log_concave") {
  CHECK(is_log_concave(big({1, 16, 93, 238, 256, 96})));
  CHECK_FALSE(is_log_concave(big({1, 1, 2})));
  CHECK(is_log_concave(big({1, 16, 186, 1428, 6144, 11520})));
  CHECK(is_log_concave(big({1, 4, 10, 12, 0, 0, 0})));  // trailing zeros ignored
  CHECK_FALSE(is_log_concave(big({1, 0, 1})));
  CHECK(is_log_concave(big({})));
  CHECK_THROWS_AS(is_log_concave(big({1, -1, 1})), DomainError);
}

TEST_CASE("log-concavity of the e_n and chi_n sequences for k <= 12") {
  for (int k = 0; k <= 12; ++k) {
    const auto poly = product_linear_factors(WeightSequence::binomial(k));
    CHECK(is_log_concave(poly.coefficients()));
    CHECK(is_log_concave(urn_counts(k, k + 1)));
  }
}

TEST_CASE("darroch_mode_estimate: worked examples") {
  auto e1 = darroch_mode_estimate(WeightSequence{1, 1});
  CHECK(e1.center == 1);
  CHECK(e1.candidates == std::vector<long>{1});

  auto e4 = darroch_mode_estimate(WeightSequence::binomial(4));
  CHECK(e4.center == Rational(121, 35));
  CHECK(e4.candidates == std::vector<long>{3, 4});
  const auto c4 = product_linear_factors(WeightSequence::binomial(4));
  CHECK(argmax_indices(c4.coefficients()) == std::vector<std::size_t>{4});

  auto e2 = darroch_mode_estimate(WeightSequence::binomial(2));
  CHECK(e2.center == Rational(5, 3));
  CHECK(e2.candidates == std::vector<long>{1, 2});

  // half-integer: both neighbours
  auto half = darroch_mode_estimate(WeightSequence{1});
  CHECK(half.center == Rational(1, 2));
  CHECK(half.candidates == std::vector<long>{0, 1});

  CHECK_THROWS_AS(darroch_mode_estimate(WeightSequence{1, -2}), DomainError);
}

TEST_CASE("darroch_mode_estimate contains every mode") {
  std::vector<WeightSequence> cases;
  for (int k = 0; k <= 12; ++k) cases.push_back(WeightSequence::binomial(k));
  std::mt19937_64 rng(2006);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigCount> alpha;
    const std::size_t len = rng() % 13;
    for (std::size_t j = 0; j < len; ++j) alpha.emplace_back(static_cast<long long>(rng() % 50));
    cases.emplace_back(std::move(alpha));
  }
  for (const auto& alpha : cases) {
    const auto estimate = darroch_mode_estimate(alpha);
    const auto poly = product_linear_factors(alpha);
    for (std::size_t m : argmax_indices(poly.coefficients())) {
      CHECK(std::find(estimate.candidates.begin(), estimate.candidates.end(), static_cast<long>(m)) !=
            estimate.candidates.end());
    }
  }
}

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "setchroma/bigint.hpp"

namespace setchroma {

/// Finite weight sequence alpha_0, ..., alpha_k. Entries may be any integer;
/// operations that need nonnegativity check it themselves.
class WeightSequence {
 public:
  WeightSequence() = default;
  explicit WeightSequence(std::vector<BigCount> weights) : weights_(std::move(weights)) {}
  WeightSequence(std::initializer_list<long long> weights);

  /// alpha_j = C(k, j), the weights of the balls-into-urns problem.
  static WeightSequence binomial(int k);

  std::size_t size() const noexcept { return weights_.size(); }
  bool empty() const noexcept { return weights_.empty(); }
  const BigCount& operator[](std::size_t j) const { return weights_[j]; }
  std::span<const BigCount> weights() const noexcept { return weights_; }
  bool is_nonnegative() const;

  auto begin() const noexcept { return weights_.begin(); }
  auto end() const noexcept { return weights_.end(); }

 private:
  std::vector<BigCount> weights_;
};

/// Dense polynomial c_0 + c_1 t + ... + c_d t^d with exact coefficients.
/// Never empty; trailing zeros are trimmed except for the zero polynomial {0}.
class CoefficientPolynomial {
 public:
  CoefficientPolynomial() : coeffs_{0} {}
  explicit CoefficientPolynomial(std::vector<BigCount> coeffs);

  static CoefficientPolynomial one() { return CoefficientPolynomial(std::vector<BigCount>{1}); }

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  /// [t^n] of the polynomial; zero past the degree.
  BigCount coefficient(std::size_t n) const;
  std::span<const BigCount> coefficients() const noexcept { return coeffs_; }

  /// In-place multiplication by (1 + a t).
  CoefficientPolynomial& multiply_linear(const BigCount& a);

  friend bool operator==(const CoefficientPolynomial&, const CoefficientPolynomial&) = default;

 private:
  void trim();
  std::vector<BigCount> coeffs_;
};

/// prod_j (1 + alpha_j t). Zero weights contribute the identity factor.
CoefficientPolynomial product_linear_factors(const WeightSequence& alpha);

/// chi_n(alpha) = n! [t^n] prod_j (1 + alpha_j t), for n = 0..n_max.
std::vector<BigCount> weighted_injective_counts(const WeightSequence& alpha, int n_max);

/// chi_n(k) for n = 0..n_max: ordered fillings of n urns with subsets of [k]
/// of pairwise distinct sizes.
std::vector<BigCount> urn_counts(int k, int n_max);

/// a_i^2 >= a_{i-1} a_{i+1} at every interior index up to the last nonzero entry.
/// Negative entries throw DomainError.
bool is_log_concave(std::span<const BigCount> seq);

struct ModeEstimate {
  Rational center;               ///< M = (k + 1) - sum_j 1 / (1 + alpha_j)
  std::vector<long> candidates;  ///< {M} if integral, else {floor M, ceil M}
};

/// Darroch's estimate for the index of the largest coefficient of
/// prod_j (1 + alpha_j t). Requires all alpha_j >= 0.
ModeEstimate darroch_mode_estimate(const WeightSequence& alpha);

/// Every index at which `seq` attains its maximum, ascending.
std::vector<std::size_t> argmax_indices(std::span<const BigCount> seq);

}  // namespace setchroma

#include "setchroma/genfunc.hpp"

#include <algorithm>
#include <string>

#include "setchroma/combinatorics.hpp"
#include "setchroma/errors.hpp"

namespace setchroma {

WeightSequence::WeightSequence(std::initializer_list<long long> weights) {
  weights_.reserve(weights.size());
  for (long long w : weights) weights_.emplace_back(w);
}

WeightSequence WeightSequence::binomial(int k) { return WeightSequence(binomial_row(k)); }

bool WeightSequence::is_nonnegative() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const BigCount& w) { return w >= 0; });
}

CoefficientPolynomial::CoefficientPolynomial(std::vector<BigCount> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
  trim();
}

void CoefficientPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

BigCount CoefficientPolynomial::coefficient(std::size_t n) const {
  return n < coeffs_.size() ? coeffs_[n] : BigCount(0);
}

CoefficientPolynomial& CoefficientPolynomial::multiply_linear(const BigCount& a) {
  if (a == 0) return *this;
  coeffs_.emplace_back(0);
  for (std::size_t i = coeffs_.size() - 1; i > 0; --i) coeffs_[i] += a * coeffs_[i - 1];
  trim();
  return *this;
}

CoefficientPolynomial product_linear_factors(const WeightSequence& alpha) {
  CoefficientPolynomial result = CoefficientPolynomial::one();
  for (const BigCount& a : alpha) result.multiply_linear(a);
  return result;
}

std::vector<BigCount> weighted_injective_counts(const WeightSequence& alpha, int n_max) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative, got " + std::to_string(n_max));
  const CoefficientPolynomial poly = product_linear_factors(alpha);
  std::vector<BigCount> counts;
  counts.reserve(static_cast<std::size_t>(n_max) + 1);
  BigCount n_factorial = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) n_factorial *= n;
    counts.push_back(n_factorial * poly.coefficient(static_cast<std::size_t>(n)));
  }
  return counts;
}

std::vector<BigCount> urn_counts(int k, int n_max) {
  if (k < 0) throw DomainError("k must be nonnegative, got " + std::to_string(k));
  return weighted_injective_counts(WeightSequence::binomial(k), n_max);
}

bool is_log_concave(std::span<const BigCount> seq) {
  for (const BigCount& a : seq) {
    if (a < 0) throw DomainError("is_log_concave: sequence has a negative entry");
  }
  std::size_t last = seq.size();
  while (last > 0 && seq[last - 1] == 0) --last;
  // Interior indices 1 .. last-2 of the support prefix.
  for (std::size_t i = 1; i + 1 < last; ++i) {
    if (seq[i] * seq[i] < seq[i - 1] * seq[i + 1]) return false;
  }
  return true;
}

namespace {

BigCount floor_of(const Rational& r) {
  const BigCount num = boost::multiprecision::numerator(r);
  const BigCount den = boost::multiprecision::denominator(r);  // always positive
  BigCount q = num / den;                                      // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

}  // namespace

ModeEstimate darroch_mode_estimate(const WeightSequence& alpha) {
  if (!alpha.is_nonnegative()) throw DomainError("darroch_mode_estimate: weights must be nonnegative");
  Rational center(static_cast<long long>(alpha.size()));
  for (const BigCount& a : alpha) center -= Rational(BigCount(1), BigCount(1 + a));

  ModeEstimate estimate{center, {}};
  const BigCount lo = floor_of(center);
  estimate.candidates.push_back(lo.convert_to<long>());
  if (Rational(lo) != center) estimate.candidates.push_back(lo.convert_to<long>() + 1);
  return estimate;
}

std::vector<std::size_t> argmax_indices(std::span<const BigCount> seq) {
  std::vector<std::size_t> result;
  if (seq.empty()) return result;
  const BigCount& best = *std::max_element(seq.begin(), seq.end());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == best) result.push_back(i);
  }
  return result;
}

}  // namespace setchroma

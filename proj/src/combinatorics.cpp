#include "setchroma/combinatorics.hpp"

#include <limits>
#include <string>

#include "setchroma/errors.hpp"

namespace setchroma {

BigCount binomial(int n, int j) {
  if (n < 0) throw DomainError("binomial: n must be nonnegative, got " + std::to_string(n));
  if (j < 0 || j > n) return 0;
  if (j > n - j) j = n - j;
  BigCount result = 1;
  for (int i = 0; i < j; ++i) {
    result *= n - i;
    result /= i + 1;  // exact: result is C(n, i + 1) after this step
  }
  return result;
}

std::vector<BigCount> binomial_row(int k) {
  if (k < 0) throw DomainError("binomial_row: k must be nonnegative, got " + std::to_string(k));
  std::vector<BigCount> row(static_cast<std::size_t>(k) + 1);
  row[0] = 1;
  for (int j = 1; j <= k; ++j) row[j] = row[j - 1] * (k - j + 1) / j;
  return row;
}

BigCount gaussian_binomial(int k, int j, std::int64_t q) {
  if (k < 0) throw DomainError("gaussian_binomial: k must be nonnegative, got " + std::to_string(k));
  if (q < 2) throw DomainError("gaussian_binomial: q must be at least 2, got " + std::to_string(q));
  if (j < 0 || j > k) return 0;
  if (j > k - j) j = k - j;
  // prod_{i<j} (q^{k-i} - 1) / (q^{i+1} - 1)
  const BigCount base = q;
  BigCount numerator = 1;
  BigCount denominator = 1;
  for (int i = 0; i < j; ++i) {
    numerator *= boost::multiprecision::pow(base, static_cast<unsigned>(k - i)) - 1;
    denominator *= boost::multiprecision::pow(base, static_cast<unsigned>(i + 1)) - 1;
  }
  return numerator / denominator;
}

BigCount franel(int k, int r) {
  if (k < 0 || r < 0) throw DomainError("franel: k and r must be nonnegative");
  BigCount sum = 0;
  for (const BigCount& c : binomial_row(k)) sum += boost::multiprecision::pow(c, static_cast<unsigned>(r));
  return sum;
}

BigCount factorial(int n) {
  if (n < 0) throw DomainError("factorial: n must be nonnegative, got " + std::to_string(n));
  BigCount result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigCount pow2(int e) {
  if (e < 0) throw DomainError("pow2: exponent must be nonnegative, got " + std::to_string(e));
  BigCount result = 1;
  result <<= e;
  return result;
}

std::uint64_t bell_number_saturating(int n) {
  if (n < 0) throw DomainError("bell_number: n must be nonnegative");
  // Bell triangle.
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t value : row) {
      const std::uint64_t prev = next.back();
      next.push_back(prev > kMax - value ? kMax : prev + value);
    }
    row = std::move(next);
  }
  return row.front();
}

}  // namespace setchroma

#pragma once

#include <cstdint>
#include <vector>

#include "setchroma/bigint.hpp"

namespace setchroma {

/// C(n, j). Zero when j < 0 or j > n; DomainError when n < 0.
BigCount binomial(int n, int j);

/// C(k, 0), ..., C(k, k).
std::vector<BigCount> binomial_row(int k);

/// Number of j-dimensional subspaces of GF(q)^k. Zero outside 0 <= j <= k.
/// Only integer field sizes q >= 2 are accepted.
BigCount gaussian_binomial(int k, int j, std::int64_t q);

/// Extended Franel number: sum over j of C(k, j)^r.
BigCount franel(int k, int r);

BigCount factorial(int n);

/// 2^e for e >= 0.
BigCount pow2(int e);

/// Bell number B(n) as a double-free upper bound for capacity checks.
/// Saturates at UINT64_MAX.
std::uint64_t bell_number_saturating(int n);

}  // namespace setchroma

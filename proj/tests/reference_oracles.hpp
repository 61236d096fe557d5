#pragma once

// Test-only reference computations, independent of the library's code paths.

#include <cstdint>
#include <set>
#include <vector>

#include "setchroma/bigint.hpp"

namespace setchroma::testing {

/// Rows 0..max_n of Pascal's triangle by the additive recurrence.
inline std::vector<std::vector<BigCount>> pascal_triangle(int max_n) {
  std::vector<std::vector<BigCount>> rows;
  for (int n = 0; n <= max_n; ++n) {
    std::vector<BigCount> row(static_cast<std::size_t>(n) + 1, 1);
    for (int j = 1; j < n; ++j) row[j] = rows[n - 1][j - 1] + rows[n - 1][j];
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Counts j-dimensional subspaces of GF(q)^k (q prime) by closing spans
/// dimension by dimension and deduplicating them as point sets.
inline std::uint64_t count_subspaces(int k, int j, int q) {
  int size = 1;
  for (int i = 0; i < k; ++i) size *= q;
  auto add = [&](int a, int b) {
    int out = 0, place = 1;
    for (int i = 0; i < k; ++i) {
      out += ((a % q + b % q) % q) * place;
      a /= q;
      b /= q;
      place *= q;
    }
    return out;
  };
  auto scale = [&](int c, int a) {
    int out = 0, place = 1;
    for (int i = 0; i < k; ++i) {
      out += ((a % q) * c % q) * place;
      a /= q;
      place *= q;
    }
    return out;
  };
  using Space = std::vector<char>;  // indicator over all q^k vectors
  auto extend = [&](const Space& s, int v) {
    Space out = s;
    for (int x = 0; x < size; ++x) {
      if (!s[x]) continue;
      for (int c = 0; c < q; ++c) out[add(x, scale(c, v))] = 1;
    }
    return out;
  };
  Space zero(static_cast<std::size_t>(size), 0);
  zero[0] = 1;
  std::set<Space> level{zero};
  for (int d = 0; d < j; ++d) {
    std::set<Space> next;
    for (const Space& s : level) {
      for (int v = 0; v < size; ++v) {
        if (!s[v]) next.insert(extend(s, v));
      }
    }
    level = std::move(next);
  }
  return level.size();
}

/// e_n(alpha) by explicit expansion over n-element index subsets.
inline BigCount elementary_symmetric(const std::vector<BigCount>& alpha, int n) {
  BigCount total = 0;
  const std::uint32_t count = std::uint32_t{1} << alpha.size();
  for (std::uint32_t s = 0; s < count; ++s) {
    if (__builtin_popcount(s) != n) continue;
    BigCount term = 1;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (s & (std::uint32_t{1} << j)) term *= alpha[j];
    }
    total += term;
  }
  return total;
}

/// Table of distinct-size urn fillings chi_n(k), rows n = 0..9, columns k = 0..7,
/// as published alongside the balls-into-urns problem.
inline const char* const kUrnTable[10][8] = {
    {"1", "1", "1", "1", "1", "1", "1", "1"},
    {"1", "2", "4", "8", "16", "32", "64", "128"},
    {"0", "2", "10", "44", "186", "772", "3172", "12952"},
    {"0", "0", "12", "144", "1428", "13080", "115104", "989184"},
    {"0", "0", "0", "216", "6144", "139800", "2821464", "53500944"},
    {"0", "0", "0", "0", "11520", "780000", "41472000", "1870310400"},
    {"0", "0", "0", "0", "0", "1800000", "293544000", "37139820480"},
    {"0", "0", "0", "0", "0", "0", "816480000", "325275955200"},
    {"0", "0", "0", "0", "0", "0", "0", "1067311728000"},
    {"0", "0", "0", "0", "0", "0", "0", "0"},
};

}  // namespace setchroma::testing

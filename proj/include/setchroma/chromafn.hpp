#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

#include "setchroma/bigint.hpp"
#include "setchroma/genfunc.hpp"
#include "setchroma/graph.hpp"

namespace setchroma {

/// Number of proper set k-colorings: each vertex gets a subset of [k] and
/// adjacent vertices get subsets of different sizes. Evaluated as
///   sum over connected partitions pi of mu(0, pi) prod_{B in pi} Fr(k, |B|).
BigCount set_chromatic(const SimpleGraph& g, int k);
BigCount set_chromatic(const BondLattice& lattice, int k);

/// beta_r = sum_j alpha_j^r for r = 0..r_max.
std::vector<BigCount> power_sums(const WeightSequence& alpha, int r_max);

/// Sum over proper colorings f : V -> {0..k} of prod_i alpha_{f(i)}, by
/// Moebius inversion over the bond lattice with block factor beta_{|B|}.
BigCount weighted_chromatic(const SimpleGraph& g, const WeightSequence& alpha);
BigCount weighted_chromatic(const BondLattice& lattice, const WeightSequence& alpha);

/// Sizes |S_0|, ..., |S_k| of the classes of a partitioned color set.
class BlockSizeProfile {
 public:
  BlockSizeProfile() = default;
  /// Throws DomainError on a negative size.
  explicit BlockSizeProfile(std::vector<BigCount> sizes);
  BlockSizeProfile(std::initializer_list<long long> sizes);

  /// Class sizes of the subspace lattice of GF(q)^k graded by dimension.
  static BlockSizeProfile subspaces(int k, std::int64_t q);

  const std::vector<BigCount>& sizes() const noexcept { return sizes_; }

 private:
  std::vector<BigCount> sizes_;
};

/// Colorings of the vertices by elements of a partitioned set in which
/// adjacent vertices take elements from different classes.
BigCount partitioned_set_chromatic(const SimpleGraph& g, const BlockSizeProfile& sizes);

enum class SpecialForm {
  kChi0,      ///< chi_0(k) = 1
  kChi1,      ///< chi_1(k) = 2^k
  kChi2,      ///< chi_2(k) = 2^{2k} - C(2k, k)
  kChi3,      ///< chi_3(k) = 2^{3k} - 3 2^k C(2k, k) + 2 Fr(k, 3)
  kChiP3,     ///< path on three vertices: 2^{3k} - 2 2^k C(2k, k) + Fr(k, 3)
  kChiEmpty,  ///< edgeless graph on n vertices: 2^{nk}
  kChiTop,    ///< chi_{k+1}(k) = (k+1)! prod_j C(k, j)
};

/// Accepts chi0, chi1, chi2, chi3, chiP3, chiEmpty, chiTop. Unknown names
/// throw DomainError.
SpecialForm parse_special_form(std::string_view name);
std::string_view special_form_name(SpecialForm form);

/// Closed-form value; kChiEmpty needs `n`.
BigCount closed_form_special(SpecialForm form, int k, std::optional<int> n = std::nullopt);

}  // namespace setchroma

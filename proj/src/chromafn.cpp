#include "setchroma/chromafn.hpp"

#include <array>
#include <bit>
#include <string>

#include "setchroma/combinatorics.hpp"
#include "setchroma/errors.hpp"

namespace setchroma {

namespace {

// sum over pi of mu(0, pi) prod_B factor[|B|]
BigCount mobius_block_sum(const BondLattice& lattice, const std::vector<BigCount>& factor) {
  BigCount sum = 0;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    BigCount term = lattice.mobius(i);
    for (VertexMask b : lattice.blocks(i)) {
      term *= factor[static_cast<std::size_t>(std::popcount(b))];
      if (term == 0) break;
    }
    sum += term;
  }
  return sum;
}

void check_k(int k) {
  if (k < 0) throw DomainError("k must be nonnegative, got " + std::to_string(k));
}

}  // namespace

BigCount set_chromatic(const SimpleGraph& g, int k) {
  check_k(k);
  return set_chromatic(connected_partitions(g), k);
}

BigCount set_chromatic(const BondLattice& lattice, int k) {
  check_k(k);
  std::vector<BigCount> franel_by_size(static_cast<std::size_t>(lattice.ground_size()) + 1);
  for (int r = 0; r <= lattice.ground_size(); ++r) franel_by_size[r] = franel(k, r);
  return mobius_block_sum(lattice, franel_by_size);
}

std::vector<BigCount> power_sums(const WeightSequence& alpha, int r_max) {
  if (r_max < 0) throw DomainError("power_sums: r_max must be nonnegative");
  std::vector<BigCount> beta(static_cast<std::size_t>(r_max) + 1, 0);
  for (const BigCount& a : alpha) {
    BigCount power = 1;
    for (int r = 0; r <= r_max; ++r) {
      beta[r] += power;
      power *= a;
    }
  }
  return beta;
}

BigCount weighted_chromatic(const SimpleGraph& g, const WeightSequence& alpha) {
  return weighted_chromatic(connected_partitions(g), alpha);
}

BigCount weighted_chromatic(const BondLattice& lattice, const WeightSequence& alpha) {
  return mobius_block_sum(lattice, power_sums(alpha, lattice.ground_size()));
}

BlockSizeProfile::BlockSizeProfile(std::vector<BigCount> sizes) : sizes_(std::move(sizes)) {
  for (const BigCount& s : sizes_) {
    if (s < 0) throw DomainError("block sizes must be nonnegative");
  }
}

BlockSizeProfile::BlockSizeProfile(std::initializer_list<long long> sizes) {
  for (long long s : sizes) {
    if (s < 0) throw DomainError("block sizes must be nonnegative");
    sizes_.emplace_back(s);
  }
}

BlockSizeProfile BlockSizeProfile::subspaces(int k, std::int64_t q) {
  std::vector<BigCount> sizes;
  for (int j = 0; j <= k; ++j) sizes.push_back(gaussian_binomial(k, j, q));
  return BlockSizeProfile(std::move(sizes));
}

BigCount partitioned_set_chromatic(const SimpleGraph& g, const BlockSizeProfile& sizes) {
  return weighted_chromatic(g, WeightSequence(sizes.sizes()));
}

namespace {

constexpr std::array<std::pair<SpecialForm, std::string_view>, 7> kSpecialNames{{
    {SpecialForm::kChi0, "chi0"},
    {SpecialForm::kChi1, "chi1"},
    {SpecialForm::kChi2, "chi2"},
    {SpecialForm::kChi3, "chi3"},
    {SpecialForm::kChiP3, "chiP3"},
    {SpecialForm::kChiEmpty, "chiEmpty"},
    {SpecialForm::kChiTop, "chiTop"},
}};

}  // namespace

SpecialForm parse_special_form(std::string_view name) {
  for (auto [form, text] : kSpecialNames) {
    if (text == name) return form;
  }
  throw DomainError("unknown closed form '" + std::string(name) + "'");
}

std::string_view special_form_name(SpecialForm form) {
  for (auto [f, text] : kSpecialNames) {
    if (f == form) return text;
  }
  return "?";
}

BigCount closed_form_special(SpecialForm form, int k, std::optional<int> n) {
  check_k(k);
  switch (form) {
    case SpecialForm::kChi0:
      return 1;
    case SpecialForm::kChi1:
      return pow2(k);
    case SpecialForm::kChi2:
      return pow2(2 * k) - binomial(2 * k, k);
    case SpecialForm::kChi3:
      return pow2(3 * k) - 3 * pow2(k) * binomial(2 * k, k) + 2 * franel(k, 3);
    case SpecialForm::kChiP3:
      return pow2(3 * k) - 2 * pow2(k) * binomial(2 * k, k) + franel(k, 3);
    case SpecialForm::kChiEmpty:
      if (!n || *n < 0) throw DomainError("chiEmpty needs a vertex count n >= 0");
      return pow2(*n * k);
    case SpecialForm::kChiTop: {
      BigCount product = factorial(k + 1);
      for (const BigCount& c : binomial_row(k)) product *= c;
      return product;
    }
  }
  throw DomainError("unknown closed form");
}

}  // namespace setchroma

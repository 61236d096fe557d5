#include "setchroma/oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "setchroma/capacity.hpp"
#include "setchroma/errors.hpp"

namespace setchroma::oracle {

namespace {

void check_k(int k) {
  if (k < 0) throw DomainError("k must be nonnegative, got " + std::to_string(k));
}

// Advances a base-`radix` odometer; false after the last state.
bool advance(std::vector<std::uint32_t>& digits, std::uint32_t radix) {
  for (auto& d : digits) {
    if (++d < radix) return true;
    d = 0;
  }
  return false;
}

}  // namespace

BigCount brute_force_set_coloring(const SimpleGraph& g, int k) {
  check_k(k);
  const int n = g.order();
  require_capacity(std::pow(2.0L, static_cast<long double>(n) * k), kDefaultEnumerationCapacity,
                   "brute-force set coloring");
  if (k >= 32) throw CapacityError("brute-force set coloring supports k < 32");
  const std::vector<Edge> edges = g.edges();
  const std::uint32_t radix = std::uint32_t{1} << k;
  std::vector<std::uint32_t> subset(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  do {
    bool proper = true;
    for (const Edge& e : edges) {
      if (std::popcount(subset[e.u - 1]) == std::popcount(subset[e.v - 1])) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
  } while (advance(subset, radix));
  return BigCount(count);
}

BigCount brute_force_weighted(const SimpleGraph& g, const WeightSequence& alpha) {
  const int n = g.order();
  const std::size_t colors = alpha.size();
  require_capacity(std::pow(static_cast<long double>(colors), static_cast<long double>(n)),
                   kDefaultEnumerationCapacity, "brute-force weighted coloring");
  if (colors == 0) return n == 0 ? BigCount(1) : BigCount(0);
  const std::vector<Edge> edges = g.edges();
  std::vector<std::uint32_t> color(static_cast<std::size_t>(n), 0);
  BigCount total = 0;
  do {
    bool proper = true;
    for (const Edge& e : edges) {
      if (color[e.u - 1] == color[e.v - 1]) {
        proper = false;
        break;
      }
    }
    if (!proper) continue;
    BigCount weight = 1;
    for (std::uint32_t c : color) weight *= alpha[c];
    total += weight;
  } while (advance(color, static_cast<std::uint32_t>(colors)));
  return total;
}

BigCount brute_force_urns(int n, int k) {
  check_k(k);
  if (n < 0) throw DomainError("n must be nonnegative, got " + std::to_string(n));
  require_capacity(std::pow(2.0L, static_cast<long double>(n) * k), kDefaultEnumerationCapacity,
                   "brute-force urn enumeration");
  if (k >= 32) throw CapacityError("brute-force urn enumeration supports k < 32");
  const std::uint32_t radix = std::uint32_t{1} << k;
  std::vector<std::uint32_t> urn(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  do {
    std::uint64_t sizes_seen = 0;
    bool distinct = true;
    for (std::uint32_t s : urn) {
      const std::uint64_t size_bit = std::uint64_t{1} << std::popcount(s);
      if (sizes_seen & size_bit) {
        distinct = false;
        break;
      }
      sizes_seen |= size_bit;
    }
    if (distinct) ++count;
  } while (advance(urn, radix));
  return BigCount(count);
}

BigCount brute_force_block_constant(const Partition& blocks, const WeightSequence& alpha) {
  const int n = blocks.ground_size();
  const std::size_t colors = alpha.size();
  require_capacity(std::pow(static_cast<long double>(colors), static_cast<long double>(n)),
                   kDefaultEnumerationCapacity, "brute-force block-constant sum");
  if (colors == 0) return n == 0 ? BigCount(1) : BigCount(0);
  std::vector<int> block_of(static_cast<std::size_t>(n));
  for (std::size_t b = 0; b < blocks.block_count(); ++b) {
    for (int v = 0; v < n; ++v) {
      if (blocks.blocks()[b] & (VertexMask{1} << v)) block_of[v] = static_cast<int>(b);
    }
  }
  std::vector<std::uint32_t> color(static_cast<std::size_t>(n), 0);
  BigCount total = 0;
  do {
    bool constant = true;
    std::vector<int> block_color(blocks.block_count(), -1);
    for (int v = 0; v < n && constant; ++v) {
      int& c = block_color[block_of[v]];
      if (c < 0) {
        c = static_cast<int>(color[v]);
      } else if (c != static_cast<int>(color[v])) {
        constant = false;
      }
    }
    if (!constant) continue;
    BigCount weight = 1;
    for (std::uint32_t c : color) weight *= alpha[c];
    total += weight;
  } while (advance(color, static_cast<std::uint32_t>(colors)));
  return total;
}

namespace {

bool colorable(const SimpleGraph& g, int colors, std::vector<int>& color, int v) {
  if (v > g.order()) return true;
  for (int c = 0; c < colors; ++c) {
    bool clash = false;
    for (int u = 1; u < v; ++u) {
      if (g.has_edge(u, v) && color[u - 1] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    color[v - 1] = c;
    if (colorable(g, colors, color, v + 1)) return true;
  }
  return false;
}

}  // namespace

int chromatic_number(const SimpleGraph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (int c = 0;; ++c) {
    if (colorable(g, c, color, 1)) return c;
  }
}

}  // namespace setchroma::oracle

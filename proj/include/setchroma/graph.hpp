#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setchroma/bigint.hpp"

namespace setchroma {

/// Bit v-1 stands for vertex v.
using VertexMask = std::uint32_t;

inline constexpr int kMaxVertices = 32;

/// Unordered edge {u, v}, stored with 1 <= u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Loop-free graph without multiple edges on the vertices 1..n.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0);
  SimpleGraph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept;

  /// Adds {u, v}; throws DomainError on loops, duplicates or bad endpoints.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// Neighbours of vertex v as a mask.
  VertexMask neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v - 1)]; }
  VertexMask all_vertices() const noexcept;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexMask> adjacency_;
};

// Constructors for the usual families.
SimpleGraph complete_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph edgeless_graph(int n);

/// Vertices of `b` are shifted by a.order().
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

/// Subgraph induced on `vertices`, relabelled 1..|vertices| in increasing order.
SimpleGraph induced_subgraph(const SimpleGraph& g, VertexMask vertices);

/// Vertex v is mapped to relabel[v-1]; `relabel` must be a permutation of 1..n.
SimpleGraph relabel(const SimpleGraph& g, std::span<const int> relabel);

/// True if `vertices` is nonempty and induces a connected subgraph.
bool induces_connected(const SimpleGraph& g, VertexMask vertices);
bool is_connected(const SimpleGraph& g);

/// Vertex sets of the connected components, ordered by least vertex.
std::vector<VertexMask> connected_components(const SimpleGraph& g);

/// All 2^{n(n-1)/2} labelled graphs on n vertices, by edge-subset index.
std::vector<SimpleGraph> all_graphs(int n);

/// G(n, 1/2) drawn from the raw bit stream of `rng`.
SimpleGraph random_graph(int n, std::mt19937_64& rng);

SimpleGraph delete_edge(const SimpleGraph& g, Edge e);

/// Identifies the endpoints of e into the smaller label, drops the loop and
/// merges parallels; vertices above the larger endpoint move down by one.
SimpleGraph contract_edge(const SimpleGraph& g, Edge e);

/// Parses the edge-list format: header line "n", then "u v" lines with
/// 1 <= u < v <= n. Blank lines and lines starting with '#' are skipped.
SimpleGraph parse_graph(std::string_view text);
std::string to_edge_list(const SimpleGraph& g);

// ---------------------------------------------------------------------------
// Connected partitions

/// Set partition of [n] with blocks ordered by least element.
class Partition {
 public:
  Partition() = default;
  /// Blocks as vertex masks; normalised to canonical order. Throws DomainError
  /// unless the blocks are nonempty, pairwise disjoint and cover [n].
  Partition(int n, std::vector<VertexMask> blocks);
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  static Partition singletons(int n);

  int ground_size() const noexcept { return n_; }
  std::span<const VertexMask> blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }

  /// Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  /// "1 3|2" style rendering.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int n_ = 0;
  std::vector<VertexMask> blocks_;
};

/// The connected partitions of a graph, in canonical order (block count
/// descending, then lexicographic block structure), together with
/// mu(0, pi) for each element. Immutable once built.
class BondLattice {
 public:
  int ground_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return offsets_.size() - 1; }

  /// Index of the all-singletons partition; always 0.
  static constexpr std::size_t bottom() noexcept { return 0; }

  std::span<const VertexMask> blocks(std::size_t i) const;
  Partition element(std::size_t i) const;
  std::optional<std::size_t> find(const Partition& p) const;

  const BigCount& mobius(std::size_t i) const { return mobius_[i]; }
  std::span<const BigCount> mobius_values() const noexcept { return mobius_; }

  /// Element a refines element b.
  bool refines(std::size_t a, std::size_t b) const;

 private:
  friend BondLattice connected_partitions(const SimpleGraph& g);

  int n_ = 0;
  std::vector<VertexMask> block_masks_;
  std::vector<std::size_t> offsets_{0};
  std::vector<BigCount> mobius_;
};

/// Enumerates set partitions by restricted-growth strings and keeps those
/// whose blocks induce connected subgraphs. Throws CapacityError when
/// Bell(n) exceeds the lattice budget (n <= 12 by default).
BondLattice connected_partitions(const SimpleGraph& g);

/// mu(0, pi) for every element by the defining recursion
/// mu(0, pi) = -sum_{sigma < pi} mu(0, sigma). Quadratic in the lattice size.
std::vector<BigCount> mobius_from_bottom(const BondLattice& lattice);

}  // namespace setchroma

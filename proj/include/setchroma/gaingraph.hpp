#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "setchroma/bigint.hpp"
#include "setchroma/graph.hpp"

namespace setchroma {

/// Element of the symmetric group on [k], in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// `images[i]` is the image of i+1; must be a bijection of [k].
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int k);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;

  /// Image of a subset of [k] (bit i-1 for element i): {phi(s) : s in S}.
  std::uint32_t apply(std::uint32_t subset) const;

  /// All k! permutations in lexicographic order of one-line notation.
  static std::vector<Permutation> all(int k);

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Edge i -> j carrying the gain phi(e_ij); the reverse direction carries the inverse.
struct GainEdge {
  int tail = 0;
  int head = 0;
  Permutation gain;
};

/// Multigraph with symmetric-group gains. Loops and parallel edges are allowed.
/// Edges are stored with tail <= head.
class PermutationGainGraph {
 public:
  PermutationGainGraph(int n, int k);

  int order() const noexcept { return n_; }
  int gain_degree() const noexcept { return k_; }
  std::span<const GainEdge> edges() const noexcept { return edges_; }

  /// Adds the edge read as tail -> head with gain `gain`; reversed if tail > head.
  void add_edge(int tail, int head, const Permutation& gain);

  /// Gain of edge `index` read in the direction from -> to.
  Permutation gain(std::size_t index, int from, int to) const;

  /// The same edges with every orientation flipped and every gain inverted.
  std::vector<GainEdge> reversed_edges() const;

 private:
  int n_;
  int k_;
  std::vector<GainEdge> edges_;
};

/// Replaces every edge of `d` by k! parallel edges, one per element of S_k.
PermutationGainGraph sk_expansion(const SimpleGraph& d, int k);

/// Assignments S_1..S_n of subsets of [k] with S_j != S_i phi(e_ij) on every edge.
BigCount count_proper_set_colorings(const PermutationGainGraph& phi);

/// Same count with the constraint read along each record exactly as given.
BigCount count_proper_set_colorings(int n, int k, std::span<const GainEdge> oriented_edges);

/// Vertex v becomes relabel[v-1].
PermutationGainGraph relabel(const PermutationGainGraph& phi, std::span<const int> relabel);

struct DeletionContractionReport {
  BigCount lhs;          ///< set_chromatic(D, k)
  BigCount deleted;      ///< set_chromatic(D \ e, k)
  BigCount contracted;   ///< set_chromatic(D / e, k)
  BigCount rhs;          ///< deleted - contracted
  bool holds = false;
};

/// Tests the deletion-contraction identity for the set-coloring function on
/// a single edge. Contraction stays within simple graphs.
DeletionContractionReport deletion_contraction_probe(const SimpleGraph& d, Edge e, int k);

/// Header "n k", then "i j p_1 ... p_k" per edge; '#' lines are comments.
PermutationGainGraph parse_gain_graph(std::string_view text);
std::string to_gain_text(const PermutationGainGraph& phi);

}  // namespace setchroma

#include "setchroma/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>

#include "setchroma/capacity.hpp"
#include "setchroma/combinatorics.hpp"
#include "setchroma/errors.hpp"

namespace setchroma {

namespace {

constexpr VertexMask bit(int v) { return VertexMask{1} << (v - 1); }

VertexMask low_bit(VertexMask m) { return m & (~m + 1); }

int popcount(VertexMask m) { return std::popcount(m); }

}  // namespace

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw DomainError("vertex count must be in [0, " + std::to_string(kMaxVertices) + "], got " +
                      std::to_string(n));
  }
  adjacency_.assign(static_cast<std::size_t>(n), 0);
}

SimpleGraph::SimpleGraph(int n, std::initializer_list<std::pair<int, int>> edges) : SimpleGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

std::size_t SimpleGraph::size() const noexcept {
  std::size_t twice = 0;
  for (VertexMask m : adjacency_) twice += static_cast<std::size_t>(popcount(m));
  return twice / 2;
}

VertexMask SimpleGraph::all_vertices() const noexcept {
  return n_ == kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

void SimpleGraph::check_vertex(int v) const {
  if (v < 1 || v > n_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
  }
}

void SimpleGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    throw DomainError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  adjacency_[u - 1] |= bit(v);
  adjacency_[v - 1] |= bit(u);
}

void SimpleGraph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) {
    throw DomainError("no edge " + std::to_string(u) + " " + std::to_string(v));
  }
  adjacency_[u - 1] &= ~bit(v);
  adjacency_[v - 1] &= ~bit(u);
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  return (adjacency_[u - 1] & bit(v)) != 0;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> result;
  for (int u = 1; u <= n_; ++u) {
    for (int v = u + 1; v <= n_; ++v) {
      if (adjacency_[u - 1] & bit(v)) result.push_back({u, v});
    }
  }
  return result;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle_graph needs at least 3 vertices");
  SimpleGraph g = path_graph(n);
  g.add_edge(1, n);
  return g;
}

SimpleGraph edgeless_graph(int n) { return SimpleGraph(n); }

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g(a.order() + b.order());
  for (Edge e : a.edges()) g.add_edge(e.u, e.v);
  for (Edge e : b.edges()) g.add_edge(e.u + a.order(), e.v + a.order());
  return g;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, VertexMask vertices) {
  vertices &= g.all_vertices();
  std::vector<int> label(static_cast<std::size_t>(g.order()) + 1, 0);
  int next = 0;
  for (int v = 1; v <= g.order(); ++v) {
    if (vertices & bit(v)) label[v] = ++next;
  }
  SimpleGraph sub(next);
  for (Edge e : g.edges()) {
    if (label[e.u] != 0 && label[e.v] != 0) sub.add_edge(label[e.u], label[e.v]);
  }
  return sub;
}

SimpleGraph relabel(const SimpleGraph& g, std::span<const int> relabel) {
  const int n = g.order();
  if (static_cast<int>(relabel.size()) != n) throw DomainError("relabel: wrong length");
  std::vector<int> sorted(relabel.begin(), relabel.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[i] != i + 1) throw DomainError("relabel: not a permutation of 1..n");
  }
  SimpleGraph out(n);
  for (Edge e : g.edges()) out.add_edge(relabel[e.u - 1], relabel[e.v - 1]);
  return out;
}

bool induces_connected(const SimpleGraph& g, VertexMask vertices) {
  if (vertices == 0) return false;
  // Union-find over the edges inside the block.
  std::vector<int> parent(static_cast<std::size_t>(g.order()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = popcount(vertices);
  for (VertexMask rest = vertices; rest != 0; rest &= rest - 1) {
    const int u = std::countr_zero(rest) + 1;
    for (VertexMask nb = g.neighbors(u) & vertices & ~((bit(u) << 1) - 1); nb != 0; nb &= nb - 1) {
      const int ru = find(u);
      const int rv = find(std::countr_zero(nb) + 1);
      if (ru != rv) {
        parent[ru] = rv;
        --components;
      }
    }
  }
  return components == 1;
}

bool is_connected(const SimpleGraph& g) { return g.order() == 0 || induces_connected(g, g.all_vertices()); }

std::vector<VertexMask> connected_components(const SimpleGraph& g) {
  std::vector<VertexMask> components;
  VertexMask unseen = g.all_vertices();
  while (unseen != 0) {
    VertexMask component = low_bit(unseen);
    VertexMask frontier = component;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier) + 1;
      frontier &= frontier - 1;
      const VertexMask fresh = g.neighbors(v) & ~component;
      component |= fresh;
      frontier |= fresh;
    }
    components.push_back(component);
    unseen &= ~component;
  }
  return components;
}

std::vector<SimpleGraph> all_graphs(int n) {
  std::vector<Edge> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) pairs.push_back({u, v});
  if (pairs.size() > 20) throw CapacityError("all_graphs: too many labelled graphs");
  std::vector<SimpleGraph> graphs;
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  graphs.reserve(count);
  for (std::uint64_t index = 0; index < count; ++index) {
    SimpleGraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((index >> i) & 1U) g.add_edge(pairs[i].u, pairs[i].v);
    }
    graphs.push_back(std::move(g));
  }
  return graphs;
}

SimpleGraph random_graph(int n, std::mt19937_64& rng) {
  SimpleGraph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if ((rng() >> 63) != 0) g.add_edge(u, v);
    }
  }
  return g;
}

SimpleGraph delete_edge(const SimpleGraph& g, Edge e) {
  SimpleGraph out = g;
  out.remove_edge(e.u, e.v);
  return out;
}

SimpleGraph contract_edge(const SimpleGraph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw DomainError("no edge " + std::to_string(e.u) + " " + std::to_string(e.v));
  }
  const int keep = std::min(e.u, e.v);
  const int gone = std::max(e.u, e.v);
  auto image = [&](int w) { return w == gone ? keep : (w > gone ? w - 1 : w); };
  SimpleGraph out(g.order() - 1);
  for (Edge f : g.edges()) {
    const int a = image(f.u);
    const int b = image(f.v);
    if (a != b && !out.has_edge(a, b)) out.add_edge(a, b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Edge-list format

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

int parse_int(std::string_view token, std::size_t line_no) {
  int value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) {
    throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

SimpleGraph parse_graph(std::string_view text) {
  std::optional<SimpleGraph> graph;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!graph) {
      if (tokens.size() != 1) throw ParseError(line_no, "header must be a single vertex count");
      const int n = parse_int(tokens[0], line_no);
      if (n < 0 || n > kMaxVertices) {
        throw ParseError(line_no, "vertex count must be in [0, " + std::to_string(kMaxVertices) + "]");
      }
      graph.emplace(n);
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "edge line must be 'u v'");
    const int u = parse_int(tokens[0], line_no);
    const int v = parse_int(tokens[1], line_no);
    if (u < 1 || v < 1 || u > graph->order() || v > graph->order()) {
      throw ParseError(line_no, "vertex out of range 1.." + std::to_string(graph->order()));
    }
    if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
    if (u > v) throw ParseError(line_no, "edge endpoints must satisfy u < v");
    if (graph->has_edge(u, v)) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    graph->add_edge(u, v);
  }
  if (!graph) throw ParseError(0, "missing vertex count header");
  return *std::move(graph);
}

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Partition

namespace {

// Lexicographic comparison of the ascending vertex lists of two masks.
bool mask_list_less(VertexMask a, VertexMask b) {
  const VertexMask diff = a ^ b;
  if (diff == 0) return false;
  const VertexMask first = low_bit(diff);
  if (a & first) {
    // a continues with `first`; b continues with something larger, or stops.
    return (b & ~(first - 1)) != 0;
  }
  return (a & ~(first - 1)) == 0;
}

bool block_sequence_less(std::span<const VertexMask> a, std::span<const VertexMask> b) {
  if (a.size() != b.size()) return a.size() > b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return mask_list_less(a[i], b[i]);
  }
  return false;
}

std::string mask_to_string(VertexMask m) {
  std::string out;
  for (; m != 0; m &= m - 1) {
    if (!out.empty()) out += ' ';
    out += std::to_string(std::countr_zero(m) + 1);
  }
  return out;
}

}  // namespace

Partition::Partition(int n, std::vector<VertexMask> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0 || n > kMaxVertices) throw DomainError("partition ground set too large");
  const VertexMask all = n == kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  VertexMask seen = 0;
  for (VertexMask b : blocks_) {
    if (b == 0) throw DomainError("partition has an empty block");
    if (b & seen) throw DomainError("partition blocks overlap");
    if (b & ~all) throw DomainError("partition block outside the ground set");
    seen |= b;
  }
  if (seen != all) throw DomainError("partition blocks do not cover the ground set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](VertexMask x, VertexMask y) { return low_bit(x) < low_bit(y); });
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<VertexMask> masks;
  for (const auto& block : blocks) {
    VertexMask m = 0;
    for (int v : block) {
      if (v < 1 || v > n) throw DomainError("partition element out of range");
      if (m & bit(v)) throw DomainError("partition block repeats an element");
      m |= bit(v);
    }
    masks.push_back(m);
  }
  return Partition(n, std::move(masks));
}

Partition Partition::singletons(int n) {
  std::vector<VertexMask> masks;
  for (int v = 1; v <= n; ++v) masks.push_back(bit(v));
  return Partition(n, std::move(masks));
}

bool Partition::refines(const Partition& coarser) const {
  for (VertexMask a : blocks_) {
    const bool inside = std::any_of(coarser.blocks_.begin(), coarser.blocks_.end(),
                                    [a](VertexMask b) { return (a & ~b) == 0; });
    if (!inside) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (VertexMask b : blocks_) {
    if (!out.empty()) out += '|';
    out += mask_to_string(b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// BondLattice

std::span<const VertexMask> BondLattice::blocks(std::size_t i) const {
  return std::span<const VertexMask>(block_masks_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
}

Partition BondLattice::element(std::size_t i) const {
  const auto b = blocks(i);
  return Partition(n_, std::vector<VertexMask>(b.begin(), b.end()));
}

std::optional<std::size_t> BondLattice::find(const Partition& p) const {
  if (p.ground_size() != n_) return std::nullopt;
  const auto target = p.blocks();
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (block_sequence_less(blocks(mid), target)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size() && std::ranges::equal(blocks(lo), target)) return lo;
  return std::nullopt;
}

bool BondLattice::refines(std::size_t a, std::size_t b) const {
  // Block-membership lookup: owner of each vertex in b.
  const auto coarse = blocks(b);
  const auto fine = blocks(a);
  if (fine.size() < coarse.size()) return false;
  std::array<VertexMask, kMaxVertices> owner{};
  for (VertexMask blk : coarse) {
    for (VertexMask m = blk; m != 0; m &= m - 1) owner[static_cast<std::size_t>(std::countr_zero(m))] = blk;
  }
  for (VertexMask blk : fine) {
    const VertexMask home = owner[static_cast<std::size_t>(std::countr_zero(blk))];
    if ((blk & ~home) != 0) return false;
  }
  return true;
}

namespace {

// Walks every restricted-growth string of length n and hands the blocks
// (indexed by first appearance, i.e. ordered by least element) to `visit`.
template <typename Visitor>
void for_each_set_partition(int n, Visitor&& visit) {
  if (n == 0) {
    visit(std::span<const VertexMask>{});
    return;
  }
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);  // max of label[0..i]
  std::vector<VertexMask> blocks;
  while (true) {
    const int block_count = prefix_max[n - 1] + 1;
    blocks.assign(static_cast<std::size_t>(block_count), 0);
    for (int v = 0; v < n; ++v) blocks[label[v]] |= VertexMask{1} << v;
    visit(std::span<const VertexMask>(blocks));

    int i = n - 1;
    while (i > 0 && label[i] > prefix_max[i - 1]) --i;
    if (i == 0) return;
    ++label[i];
    prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
    for (int j = i + 1; j < n; ++j) {
      label[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

// mu restricted to the interval [0, {B}] of the bond lattice of G[B], for every
// connected vertex set B. Since every interval [0, pi] is the product of the
// bond lattices of the blocks, mu(0, pi) is the product of these block values.
// The recursion is the defining one, sum_{sigma <= 1} mu(0, sigma) = 0, with
// the sum split on the block sigma assigns to the least vertex of B:
//   total(S) = sum over connected C containing min(S) of block_mu(C) total(S \ C).
std::vector<BigCount> block_mobius_table(const SimpleGraph& g, const std::vector<char>& connected) {
  const std::size_t count = std::size_t{1} << g.order();
  std::vector<BigCount> block_mu(count);
  std::vector<BigCount> total(count);
  total[0] = 1;
  for (std::size_t s = 1; s < count; ++s) {
    const VertexMask set = static_cast<VertexMask>(s);
    const VertexMask least = low_bit(set);
    const VertexMask rest = set ^ least;
    BigCount proper_sum = 0;  // contributions from C strictly inside S
    for (VertexMask t = rest;; t = (t - 1) & rest) {
      if (t != rest) {
        const VertexMask c = least | t;
        if (connected[c]) proper_sum += block_mu[c] * total[set ^ c];
      }
      if (t == 0) break;
    }
    if (connected[s]) {
      block_mu[s] = rest == 0 ? BigCount(1) : BigCount(-proper_sum);
      total[s] = proper_sum + block_mu[s];
    } else {
      total[s] = proper_sum;
    }
  }
  return block_mu;
}

}  // namespace

BondLattice connected_partitions(const SimpleGraph& g) {
  const int n = g.order();
  require_capacity(static_cast<long double>(bell_number_saturating(n)), kDefaultLatticeCapacity,
                   "connected-partition enumeration on " + std::to_string(n) + " vertices");
  if (n > 24) throw CapacityError("connected-partition enumeration supports at most 24 vertices");

  const std::size_t subsets = std::size_t{1} << n;
  std::vector<char> connected(subsets, 0);
  for (std::size_t s = 1; s < subsets; ++s) connected[s] = induces_connected(g, static_cast<VertexMask>(s));

  std::vector<VertexMask> masks;
  std::vector<std::size_t> offsets{0};
  for_each_set_partition(n, [&](std::span<const VertexMask> blocks) {
    for (VertexMask b : blocks) {
      if (!connected[b]) return;
    }
    masks.insert(masks.end(), blocks.begin(), blocks.end());
    offsets.push_back(masks.size());
  });

  const std::size_t count = offsets.size() - 1;
  auto span_of = [&](std::size_t i) {
    return std::span<const VertexMask>(masks).subspan(offsets[i], offsets[i + 1] - offsets[i]);
  };
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return block_sequence_less(span_of(a), span_of(b)); });

  const std::vector<BigCount> block_mu = block_mobius_table(g, connected);

  BondLattice lattice;
  lattice.n_ = n;
  lattice.block_masks_.reserve(masks.size());
  lattice.offsets_.reserve(count + 1);
  lattice.mobius_.reserve(count);
  for (std::size_t i : order) {
    BigCount mu = 1;
    for (VertexMask b : span_of(i)) {
      lattice.block_masks_.push_back(b);
      mu *= block_mu[b];
    }
    lattice.offsets_.push_back(lattice.block_masks_.size());
    lattice.mobius_.push_back(std::move(mu));
  }
  return lattice;
}

std::vector<BigCount> mobius_from_bottom(const BondLattice& lattice) {
  std::vector<BigCount> mu(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (i == BondLattice::bottom()) {
      mu[i] = 1;
      continue;
    }
    // Canonical order puts every strict refinement of i before i.
    BigCount sum = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (lattice.refines(j, i)) sum += mu[j];
    }
    mu[i] = -sum;
  }
  return mu;
}

}  // namespace setchroma

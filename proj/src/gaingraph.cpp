#include "setchroma/gaingraph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>

#include "setchroma/capacity.hpp"
#include "setchroma/chromafn.hpp"
#include "setchroma/combinatorics.hpp"
#include "setchroma/errors.hpp"

namespace setchroma {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int k = degree();
  if (k > 31) throw DomainError("permutations act on at most 31 points");
  std::vector<char> hit(static_cast<std::size_t>(k) + 1, 0);
  for (int image : images_) {
    if (image < 1 || image > k || hit[image]) {
      throw DomainError("not a permutation of 1.." + std::to_string(k));
    }
    hit[image] = 1;
  }
}

Permutation Permutation::identity(int k) {
  if (k < 0) throw DomainError("permutation degree must be nonnegative");
  std::vector<int> images(static_cast<std::size_t>(k));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

std::uint32_t Permutation::apply(std::uint32_t subset) const {
  std::uint32_t image = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (subset & (std::uint32_t{1} << i)) image |= std::uint32_t{1} << (images_[i] - 1);
  }
  return image;
}

std::vector<Permutation> Permutation::all(int k) {
  std::vector<Permutation> result;
  Permutation current = identity(k);
  std::vector<int> images(current.images_);
  do {
    result.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

PermutationGainGraph::PermutationGainGraph(int n, int k) : n_(n), k_(k) {
  if (n < 0 || n > kMaxVertices) throw DomainError("gain graph vertex count out of range");
  if (k < 0 || k > 31) throw DomainError("gain degree k must be in [0, 31]");
}

void PermutationGainGraph::add_edge(int tail, int head, const Permutation& gain) {
  if (tail < 1 || tail > n_ || head < 1 || head > n_) {
    throw DomainError("gain edge endpoint out of range 1.." + std::to_string(n_));
  }
  if (gain.degree() != k_) {
    throw DomainError("gain has degree " + std::to_string(gain.degree()) + ", expected " +
                      std::to_string(k_));
  }
  if (tail <= head) {
    edges_.push_back({tail, head, gain});
  } else {
    edges_.push_back({head, tail, gain.inverse()});
  }
}

Permutation PermutationGainGraph::gain(std::size_t index, int from, int to) const {
  const GainEdge& e = edges_.at(index);
  if (from == e.tail && to == e.head) return e.gain;
  if (from == e.head && to == e.tail) return e.gain.inverse();
  throw DomainError("edge does not join the given vertices");
}

std::vector<GainEdge> PermutationGainGraph::reversed_edges() const {
  std::vector<GainEdge> flipped;
  flipped.reserve(edges_.size());
  for (const GainEdge& e : edges_) flipped.push_back({e.head, e.tail, e.gain.inverse()});
  return flipped;
}

PermutationGainGraph sk_expansion(const SimpleGraph& d, int k) {
  if (k < 0) throw DomainError("k must be nonnegative");
  const auto edges = d.edges();
  require_capacity(std::tgamma(static_cast<long double>(k) + 1) * static_cast<long double>(edges.size()),
                   kDefaultEnumerationCapacity, "S_k-expansion");
  PermutationGainGraph phi(d.order(), k);
  const std::vector<Permutation> group = Permutation::all(k);
  for (const Edge& e : edges) {
    for (const Permutation& g : group) phi.add_edge(e.u, e.v, g);
  }
  return phi;
}

BigCount count_proper_set_colorings(const PermutationGainGraph& phi) {
  return count_proper_set_colorings(phi.order(), phi.gain_degree(), phi.edges());
}

BigCount count_proper_set_colorings(int n, int k, std::span<const GainEdge> oriented_edges) {
  require_capacity(std::pow(2.0L, static_cast<long double>(n) * k), kDefaultEnumerationCapacity,
                   "gain-graph set-coloring enumeration");
  const std::uint32_t subsets = std::uint32_t{1} << k;

  // image[e][S] = S phi(e)
  std::vector<std::vector<std::uint32_t>> image;
  image.reserve(oriented_edges.size());
  for (const GainEdge& e : oriented_edges) {
    if (e.gain.degree() != k) throw DomainError("gain degree does not match k");
    if (e.tail < 1 || e.tail > n || e.head < 1 || e.head > n) throw DomainError("edge endpoint out of range");
    std::vector<std::uint32_t> table(subsets);
    for (std::uint32_t s = 0; s < subsets; ++s) table[s] = e.gain.apply(s);
    image.push_back(std::move(table));
  }

  std::vector<std::uint32_t> assignment(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  while (true) {
    bool proper = true;
    for (std::size_t i = 0; i < oriented_edges.size(); ++i) {
      const GainEdge& e = oriented_edges[i];
      if (assignment[e.head - 1] == image[i][assignment[e.tail - 1]]) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;

    std::size_t v = 0;
    while (v < assignment.size() && ++assignment[v] == subsets) assignment[v++] = 0;
    if (v == assignment.size()) break;
  }
  return BigCount(count);
}

PermutationGainGraph relabel(const PermutationGainGraph& phi, std::span<const int> relabel) {
  const int n = phi.order();
  if (static_cast<int>(relabel.size()) != n) throw DomainError("relabel: wrong length");
  std::vector<int> sorted(relabel.begin(), relabel.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[i] != i + 1) throw DomainError("relabel: not a permutation of 1..n");
  }
  PermutationGainGraph out(n, phi.gain_degree());
  for (const GainEdge& e : phi.edges()) out.add_edge(relabel[e.tail - 1], relabel[e.head - 1], e.gain);
  return out;
}

DeletionContractionReport deletion_contraction_probe(const SimpleGraph& d, Edge e, int k) {
  if (!d.has_edge(e.u, e.v)) {
    throw DomainError("probe edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " is not in the graph");
  }
  DeletionContractionReport report;
  report.lhs = set_chromatic(d, k);
  report.deleted = set_chromatic(delete_edge(d, e), k);
  report.contracted = set_chromatic(contract_edge(d, e), k);
  report.rhs = report.deleted - report.contracted;
  report.holds = report.lhs == report.rhs;
  return report;
}

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
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

int to_int(std::string_view token, std::size_t line_no) {
  int value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) {
    throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

PermutationGainGraph parse_gain_graph(std::string_view text) {
  std::optional<PermutationGainGraph> phi;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = tokens_of(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    try {
      if (!phi) {
        if (tokens.size() != 2) throw ParseError(line_no, "header must be 'n k'");
        phi.emplace(to_int(tokens[0], line_no), to_int(tokens[1], line_no));
        continue;
      }
      const std::size_t k = static_cast<std::size_t>(phi->gain_degree());
      if (tokens.size() != k + 2) {
        throw ParseError(line_no, "edge line must be 'i j' followed by " + std::to_string(k) + " images");
      }
      std::vector<int> images;
      for (std::size_t t = 2; t < tokens.size(); ++t) images.push_back(to_int(tokens[t], line_no));
      phi->add_edge(to_int(tokens[0], line_no), to_int(tokens[1], line_no), Permutation(std::move(images)));
    } catch (const DomainError& err) {
      throw ParseError(line_no, err.what());
    }
  }
  if (!phi) throw ParseError(0, "missing 'n k' header");
  return *std::move(phi);
}

std::string to_gain_text(const PermutationGainGraph& phi) {
  std::ostringstream out;
  out << phi.order() << ' ' << phi.gain_degree() << '\n';
  for (const GainEdge& e : phi.edges()) {
    out << e.tail << ' ' << e.head;
    for (int image : e.gain.images()) out << ' ' << image;
    out << '\n';
  }
  return out.str();
}

}  // namespace setchroma

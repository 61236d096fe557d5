#include <bit>

#include "doctest.h"
#include "setchroma/combinatorics.hpp"
#include "setchroma/errors.hpp"
#include "setchroma/graph.hpp"

using namespace setchroma;

namespace {

// Recomputes sum_{sigma <= pi} mu(0, sigma) from scratch with Partition::refines.
bool satisfies_defining_recursion(const BondLattice& L, std::span<const BigCount> mu) {
  std::vector<Partition> elements;
  for (std::size_t i = 0; i < L.size(); ++i) elements.push_back(L.element(i));
  for (std::size_t p = 0; p < L.size(); ++p) {
    BigCount sum = 0;
    for (std::size_t s = 0; s < L.size(); ++s) {
      if (elements[s].refines(elements[p])) sum += mu[s];
    }
    if (sum != (p == BondLattice::bottom() ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parse_graph: valid documents") {
  const SimpleGraph p3 = parse_graph("3\n1 2\n2 3");
  CHECK(p3 == path_graph(3));

  const SimpleGraph empty = parse_graph("4\n");
  CHECK(empty.order() == 4);
  CHECK(empty.size() == 0);

  const SimpleGraph crlf = parse_graph("# triangle\r\n\r\n3\r\n1 2\r\n  # inner comment\r\n1 3\r\n2\t3\r\n");
  CHECK(crlf == complete_graph(3));
}

TEST_CASE("parse_graph: errors name the offending line") {
  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{999};
  };
  CHECK(line_of("2\n1 1") == 2);             // loop
  CHECK(line_of("3\n1 2\n2 3\n1 2") == 4);   // duplicate
  CHECK(line_of("3\n1 4") == 2);             // out of range
  CHECK(line_of("3\n0 1") == 2);             // out of range
  CHECK(line_of("3\n2 1") == 2);             // wrong orientation
  CHECK(line_of("3\n1 2 3") == 2);           // malformed
  CHECK(line_of("3\n1 x") == 2);             // malformed
  CHECK(line_of("three\n") == 1);            // bad header
  CHECK(line_of("# nothing\n") == 0);        // missing header
  CHECK_THROWS_WITH_AS(parse_graph("2\n1 1"), doctest::Contains("loop"), ParseError);
}

TEST_CASE("edge-list round trip") {
  for (int n = 0; n <= 4; ++n) {
    for (const SimpleGraph& g : all_graphs(n)) CHECK(parse_graph(to_edge_list(g)) == g);
  }
}

TEST_CASE("delete and contract") {
  CHECK(contract_edge(complete_graph(3), {1, 2}) == complete_graph(2));
  CHECK(contract_edge(complete_graph(3), {2, 3}) == complete_graph(2));
  CHECK(contract_edge(path_graph(3), {1, 2}) == complete_graph(2));

  const SimpleGraph d = delete_edge(path_graph(3), {2, 3});
  CHECK(d.order() == 3);
  CHECK(d.edges() == std::vector<Edge>{{1, 2}});

  // relabelling: contracting {2,4} in C4 (1-2-3-4-1) merges 4 into 2
  const SimpleGraph c4 = cycle_graph(4);
  CHECK_THROWS_AS(contract_edge(c4, {1, 3}), DomainError);
  const SimpleGraph c = contract_edge(c4, {3, 4});
  CHECK(c == complete_graph(3));

  CHECK_THROWS_AS(delete_edge(path_graph(3), {1, 3}), DomainError);
}

TEST_CASE("connected_partitions: small lattices") {
  const BondLattice k3 = connected_partitions(complete_graph(3));
  CHECK(k3.size() == 5);

  const BondLattice p3 = connected_partitions(path_graph(3));
  CHECK(p3.size() == 4);
  CHECK_FALSE(p3.find(Partition::from_blocks(3, {{1, 3}, {2}})).has_value());
  CHECK(p3.find(Partition::from_blocks(3, {{1, 2}, {3}})).has_value());

  const BondLattice e2 = connected_partitions(edgeless_graph(2));
  CHECK(e2.size() == 1);
  CHECK(e2.element(0) == Partition::singletons(2));

  const BondLattice empty = connected_partitions(SimpleGraph(0));
  CHECK(empty.size() == 1);
  CHECK(empty.mobius(0) == 1);
}

TEST_CASE("connected_partitions: canonical order") {
  const BondLattice L = connected_partitions(complete_graph(4));
  REQUIRE(L.size() == 15);
  CHECK(L.element(0) == Partition::singletons(4));
  CHECK(L.element(L.size() - 1).block_count() == 1);
  std::vector<std::string> rendered;
  for (std::size_t i = 0; i < L.size(); ++i) rendered.push_back(L.element(i).to_string());
  // three-block partitions in lexicographic block order; a block that is a
  // prefix of another sorts first
  const std::vector<std::string> three_blocks{"1|2|3 4", "1|2 3|4", "1|2 4|3",
                                              "1 2|3|4", "1 3|2|4", "1 4|2|3"};
  CHECK(std::vector<std::string>(rendered.begin() + 1, rendered.begin() + 7) == three_blocks);
  for (std::size_t i = 0; i + 1 < L.size(); ++i) {
    CHECK(L.blocks(i).size() >= L.blocks(i + 1).size());
    CHECK(L.find(L.element(i)) == i);
  }
}

TEST_CASE("connected_partitions: every block induces a connected subgraph") {
  for (int n = 0; n <= 5; ++n) {
    for (const SimpleGraph& g : all_graphs(n)) {
      const BondLattice L = connected_partitions(g);
      for (std::size_t i = 0; i < L.size(); ++i) {
        for (VertexMask b : L.blocks(i)) CHECK(induces_connected(g, b));
      }
    }
  }
}

TEST_CASE("connected_partitions: K_n gives all Bell(n) partitions") {
  for (int n = 0; n <= 7; ++n) {
    CHECK(connected_partitions(complete_graph(n)).size() == bell_number_saturating(n));
  }
}

TEST_CASE("lattice size is monotone under edge addition") {
  for (int n = 0; n <= 4; ++n) {
    for (const SimpleGraph& g : all_graphs(n)) {
      const std::size_t base = connected_partitions(g).size();
      for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
          if (g.has_edge(u, v)) continue;
          SimpleGraph h = g;
          h.add_edge(u, v);
          CHECK(connected_partitions(h).size() >= base);
        }
      }
    }
  }
}

TEST_CASE("mobius: K_3 by hand") {
  const BondLattice L = connected_partitions(complete_graph(3));
  CHECK(L.mobius(0) == 1);
  CHECK(L.mobius(1) == -1);
  CHECK(L.mobius(2) == -1);
  CHECK(L.mobius(3) == -1);
  CHECK(L.mobius(4) == 2);
  const auto recursive = mobius_from_bottom(L);
  CHECK(std::ranges::equal(recursive, L.mobius_values()));
}

TEST_CASE("mobius: K_n product formula, n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    const BondLattice L = connected_partitions(complete_graph(n));
    const auto recursive = mobius_from_bottom(L);
    for (std::size_t i = 0; i < L.size(); ++i) {
      BigCount expected = 1;
      for (VertexMask b : L.blocks(i)) {
        const int s = std::popcount(b);
        expected *= (s % 2 == 1 ? 1 : -1) * factorial(s - 1);
      }
      CHECK(L.mobius(i) == expected);
      CHECK(recursive[i] == expected);
    }
  }
}

TEST_CASE("mobius: defining recursion on every lattice with n <= 5") {
  for (int n = 0; n <= 5; ++n) {
    for (const SimpleGraph& g : all_graphs(n)) {
      const BondLattice L = connected_partitions(g);
      CHECK(satisfies_defining_recursion(L, L.mobius_values()));
      CHECK(std::ranges::equal(mobius_from_bottom(L), L.mobius_values()));
    }
  }
}

TEST_CASE("refinement order") {
  const BondLattice L = connected_partitions(path_graph(4));
  for (std::size_t a = 0; a < L.size(); ++a) {
    CHECK(L.refines(BondLattice::bottom(), a));
    CHECK(L.refines(a, L.size() - 1));
    for (std::size_t b = 0; b < L.size(); ++b) CHECK(L.refines(a, b) == L.element(a).refines(L.element(b)));
  }
}

TEST_CASE("connected_partitions: capacity guard") {
  CHECK_THROWS_AS(connected_partitions(edgeless_graph(13)), CapacityError);
}

TEST_CASE("SimpleGraph invariants") {
  SimpleGraph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), DomainError);
  CHECK_THROWS_AS(g.add_edge(1, 4), DomainError);
  g.add_edge(2, 1);
  CHECK(g.has_edge(1, 2));
  CHECK_THROWS_AS(g.add_edge(1, 2), DomainError);
  CHECK_THROWS_AS(SimpleGraph(33), DomainError);

  const SimpleGraph u = disjoint_union(path_graph(2), complete_graph(3));
  CHECK(u.order() == 5);
  CHECK(connected_components(u) == std::vector<VertexMask>{0b00011, 0b11100});
  CHECK(induced_subgraph(u, 0b11100) == complete_graph(3));
  CHECK(all_graphs(4).size() == 64);
}

TEST_CASE("Partition validation") {
  CHECK_THROWS_AS(Partition(3, {0b011, 0b010}), DomainError);
  CHECK_THROWS_AS(Partition(3, {0b011}), DomainError);
  CHECK_THROWS_AS(Partition(3, {0b011, 0b100, 0}), DomainError);
  CHECK(Partition(3, {0b100, 0b011}).to_string() == "1 2|3");
}

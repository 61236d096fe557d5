#include "setchroma/verify.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "setchroma/chromafn.hpp"
#include "setchroma/combinatorics.hpp"
#include "setchroma/gaingraph.hpp"
#include "setchroma/genfunc.hpp"
#include "setchroma/graph.hpp"
#include "setchroma/oracle.hpp"

namespace setchroma {

namespace {

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect_equal(const BigCount& expected, const BigCount& actual, const std::string& where) {
    ++result_.cases;
    if (expected == actual) return;
    if (result_.mismatches++ == 0) {
      result_.first_mismatch = where + ": expected " + to_decimal(expected) + ", got " + to_decimal(actual);
    }
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string describe(const SimpleGraph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " edges={";
  bool first = true;
  for (Edge e : g.edges()) {
    out << (first ? "" : ",") << e.u << '-' << e.v;
    first = false;
  }
  out << '}';
  return out.str();
}

std::vector<SimpleGraph> connected_graphs_up_to(int max_n) {
  std::vector<SimpleGraph> result;
  for (int n = 1; n <= max_n; ++n) {
    for (SimpleGraph& g : all_graphs(n)) {
      if (is_connected(g)) result.push_back(std::move(g));
    }
  }
  return result;
}

WeightSequence random_weights(int max_k, std::mt19937_64& rng) {
  const std::size_t length = 1 + static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(max_k + 1));
  std::vector<BigCount> weights;
  for (std::size_t j = 0; j < length; ++j) weights.emplace_back(static_cast<long long>(rng() % 6));
  return WeightSequence(std::move(weights));
}

CheckResult check_set_coloring(const VerifyConfig& config) {
  Check check("set_coloring_vs_brute_force");
  std::vector<SimpleGraph> graphs = connected_graphs_up_to(config.max_n);
  std::mt19937_64 rng(config.seed);
  for (int i = 0; i < config.random_graphs && config.max_n > 0; ++i) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(config.max_n));
    graphs.push_back(random_graph(n, rng));
  }
  for (const SimpleGraph& g : graphs) {
    const BondLattice lattice = connected_partitions(g);
    for (int k = 0; k <= config.max_k; ++k) {
      BigCount formula = set_chromatic(lattice, k);
      if (config.inject_fault) formula += 1;
      check.expect_equal(oracle::brute_force_set_coloring(g, k), formula,
                         describe(g) + " k=" + std::to_string(k));
    }
  }
  return check.take();
}

CheckResult check_weighted(const VerifyConfig& config) {
  Check check("weighted_vs_brute_force");
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<WeightSequence> alphas;
  for (int i = 0; i < config.random_weights; ++i) alphas.push_back(random_weights(config.max_k, rng));
  alphas.push_back(WeightSequence{0, 2, 0, 1});
  const int max_n = std::min(config.max_n, 4);
  for (int n = 0; n <= max_n; ++n) {
    for (const SimpleGraph& g : all_graphs(n)) {
      const BondLattice lattice = connected_partitions(g);
      for (const WeightSequence& alpha : alphas) {
        std::string where = describe(g) + " alpha=(";
        for (std::size_t j = 0; j < alpha.size(); ++j) where += (j ? "," : "") + to_decimal(alpha[j]);
        check.expect_equal(oracle::brute_force_weighted(g, alpha), weighted_chromatic(lattice, alpha),
                           where + ")");
      }
    }
  }
  return check.take();
}

CheckResult check_urns(const VerifyConfig& config) {
  Check check("urns_three_routes");
  for (int k = 0; k <= config.max_k; ++k) {
    const std::vector<BigCount> gf = urn_counts(k, config.max_n);
    for (int n = 0; n <= config.max_n; ++n) {
      const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      const BigCount brute = oracle::brute_force_urns(n, k);
      check.expect_equal(brute, gf[n], where + " generating function");
      check.expect_equal(brute, set_chromatic(complete_graph(n), k), where + " bond lattice");
    }
  }
  return check.take();
}

CheckResult check_gain_expansion(const VerifyConfig& config) {
  Check check("gain_expansion");
  for (const SimpleGraph& d : connected_graphs_up_to(std::min(config.max_n, 4))) {
    for (int k = 0; k <= config.max_k; ++k) {
      check.expect_equal(set_chromatic(d, k), count_proper_set_colorings(sk_expansion(d, k)),
                         describe(d) + " k=" + std::to_string(k));
    }
  }
  return check.take();
}

CheckResult check_multiplicativity(const VerifyConfig& config) {
  Check check("multiplicativity");
  for (int n = 0; n <= config.max_n; ++n) {
    for (const SimpleGraph& g : all_graphs(n)) {
      const auto components = connected_components(g);
      if (components.size() < 2) continue;
      const BondLattice lattice = connected_partitions(g);
      for (int k = 0; k <= config.max_k; ++k) {
        BigCount product = 1;
        for (VertexMask c : components) product *= set_chromatic(induced_subgraph(g, c), k);
        check.expect_equal(product, set_chromatic(lattice, k), describe(g) + " k=" + std::to_string(k));
      }
    }
  }
  return check.take();
}

CheckResult check_mobius_complete(const VerifyConfig& config) {
  Check check("mobius_complete_graph");
  for (int n = 0; n <= config.max_n + 2; ++n) {
    const BondLattice lattice = connected_partitions(complete_graph(n));
    const std::vector<BigCount> recursive = mobius_from_bottom(lattice);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      BigCount expected = 1;
      for (VertexMask b : lattice.blocks(i)) {
        const int size = std::popcount(b);
        expected *= (size % 2 == 1 ? 1 : -1) * factorial(size - 1);
      }
      const std::string where = "K" + std::to_string(n) + " " + lattice.element(i).to_string();
      check.expect_equal(expected, lattice.mobius(i), where);
      check.expect_equal(expected, recursive[i], where + " (recursion)");
    }
  }
  return check.take();
}

CheckResult check_chromatic_threshold(const VerifyConfig& config) {
  Check check("positivity_vs_chromatic_number");
  for (int n = 1; n <= config.max_n; ++n) {
    for (const SimpleGraph& g : all_graphs(n)) {
      const int chi = oracle::chromatic_number(g);
      const BondLattice lattice = connected_partitions(g);
      for (int k = 0; k <= config.max_k; ++k) {
        const bool positive = set_chromatic(lattice, k) > 0;
        check.expect_equal(chi <= k + 1 ? 1 : 0, positive ? 1 : 0,
                           describe(g) + " k=" + std::to_string(k) + " positivity");
      }
    }
  }
  return check.take();
}

}  // namespace

VerifyReport run_verification(const VerifyConfig& config) {
  VerifyReport report;
  report.checks.push_back(check_set_coloring(config));
  report.checks.push_back(check_weighted(config));
  report.checks.push_back(check_urns(config));
  report.checks.push_back(check_gain_expansion(config));
  report.checks.push_back(check_multiplicativity(config));
  report.checks.push_back(check_mobius_complete(config));
  report.checks.push_back(check_chromatic_threshold(config));
  return report;
}

}  // namespace setchroma

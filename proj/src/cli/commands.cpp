#include "setchroma/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "setchroma/chromafn.hpp"
#include "setchroma/errors.hpp"
#include "setchroma/gaingraph.hpp"
#include "setchroma/genfunc.hpp"
#include "setchroma/verify.hpp"

namespace setchroma::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { kTsv, kJson };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<BigCount> parse_list(const std::string& text) {
  std::vector<BigCount> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) values.push_back(parse_big_count(item));
    pos = comma + 1;
  }
  return values;
}

std::string join(const std::vector<BigCount>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + to_decimal(values[i]);
  return out;
}

Json json_list(const std::vector<BigCount>& values) {
  Json arr = Json::array();
  for (const BigCount& v : values) arr.push_back(to_decimal(v));
  return arr;
}

// Fixed-point rendering of a nonnegative rational with `digits` decimals (truncated).
std::string decimal_approx(const Rational& r, int digits) {
  BigCount scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const BigCount scaled = boost::multiprecision::numerator(r) * scale / boost::multiprecision::denominator(r);
  std::string s = to_decimal(scaled);
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1 - s.size()), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return s;
}

/// Scalar results: "key<TAB>value" lines, or a flat JSON object.
class Record {
 public:
  Record(std::string command, Json inputs) : command_(std::move(command)), inputs_(std::move(inputs)) {}

  void add(const std::string& key, const std::string& tsv, Json json) {
    rows_.emplace_back(key, tsv);
    outputs_[key] = std::move(json);
  }
  void add(const std::string& key, const BigCount& value) { add(key, to_decimal(value), to_decimal(value)); }

  void write(std::ostream& out, Format format) const {
    if (format == Format::kJson) {
      Json doc;
      doc["command"] = command_;
      doc["inputs"] = inputs_;
      doc["outputs"] = outputs_;
      out << doc.dump(2) << '\n';
      return;
    }
    for (const auto& [key, value] : rows_) out << key << '\t' << value << '\n';
  }

 private:
  std::string command_;
  Json inputs_;
  Json outputs_ = Json::object();
  std::vector<std::pair<std::string, std::string>> rows_;
};

Json graph_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (Edge e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"vertices", g.order()}, {"edges", edges}};
}

void write_urns_column(std::ostream& out, Format format, int k, int n_max) {
  const auto counts = urn_counts(k, n_max);
  if (format == Format::kJson) {
    Json doc;
    doc["command"] = "urns";
    doc["inputs"] = {{"k", k}, {"nmax", n_max}};
    doc["outputs"] = {{"chi", json_list(counts)}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "n\tchi_n(" << k << ")\n";
  for (int n = 0; n <= n_max; ++n) out << n << '\t' << to_decimal(counts[n]) << '\n';
}

void write_urns_grid(std::ostream& out, Format format, int k_max, int n_max) {
  std::vector<std::vector<BigCount>> columns;
  for (int k = 0; k <= k_max; ++k) columns.push_back(urn_counts(k, n_max));
  if (format == Format::kJson) {
    Json rows = Json::array();
    for (int n = 0; n <= n_max; ++n) {
      Json row = Json::array();
      for (int k = 0; k <= k_max; ++k) row.push_back(to_decimal(columns[k][n]));
      rows.push_back(std::move(row));
    }
    Json doc;
    doc["command"] = "urns";
    doc["inputs"] = {{"grid_k_max", k_max}, {"grid_n_max", n_max}};
    doc["outputs"] = {{"rows", rows}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "n\\k";
  for (int k = 0; k <= k_max; ++k) out << '\t' << k;
  out << '\n';
  for (int n = 0; n <= n_max; ++n) {
    out << n;
    for (int k = 0; k <= k_max; ++k) out << '\t' << to_decimal(columns[k][n]);
    out << '\n';
  }
}

void write_sequence(std::ostream& out, Format format, const std::string& command, Json inputs,
                    const std::string& column, const std::vector<BigCount>& values) {
  if (format == Format::kJson) {
    Json doc;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["outputs"] = {{column, json_list(values)}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "n\t" << column << '\n';
  for (std::size_t n = 0; n < values.size(); ++n) out << n << '\t' << to_decimal(values[n]) << '\n';
}

Edge parse_edge_flag(const std::string& text) {
  const auto parts = parse_list(text);
  if (parts.size() != 2) throw DomainError("--probe expects 'u,v'");
  int u = parts[0].convert_to<int>();
  int v = parts[1].convert_to<int>();
  if (u > v) std::swap(u, v);
  return {u, v};
}

}  // namespace

SimpleGraph load_graph(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) return parse_graph(read_file(spec));
  if (spec.size() >= 2 && std::string("KPCE").find(spec[0]) != std::string::npos) {
    const std::string digits = spec.substr(1);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 2) {
      const int n = std::stoi(digits);
      switch (spec[0]) {
        case 'K': return complete_graph(n);
        case 'P': return path_graph(n);
        case 'C': return cycle_graph(n);
        case 'E': return edgeless_graph(n);
      }
    }
  }
  throw DomainError("cannot open graph '" + spec + "' (not a file or a builtin K<n>/P<n>/C<n>/E<n>)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Exact set-coloring counts of graphs and the distinct-size urn distribution."};
  app.name(args.empty() ? "setchroma" : args.front());
  app.require_subcommand(1);

  std::string format_name = "tsv";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();

  // urns
  auto* urns = app.add_subcommand("urns", "chi_n(k): fill n labelled urns with subsets of [k] of distinct sizes");
  int urns_k = -1;
  int urns_nmax = -1;
  std::vector<int> grid;
  urns->add_option("--k", urns_k, "Number of colors")->check(CLI::NonNegativeNumber);
  urns->add_option("--nmax", urns_nmax, "Largest n (default k+1)")->check(CLI::NonNegativeNumber);
  auto* grid_opt = urns->add_option("--grid", grid, "Full table: K_MAX N_MAX")->expected(2);
  urns->get_option("--k")->excludes(grid_opt);

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "Set-chromatic count of a graph");
  std::string graph_file;
  int graph_k = 0;
  graph_cmd->add_option("--graph", graph_file, "Edge-list file or builtin K<n>/P<n>/C<n>/E<n>")->required();
  graph_cmd->add_option("--k", graph_k, "Number of colors")->required()->check(CLI::NonNegativeNumber);

  // alpha
  auto* alpha_cmd = app.add_subcommand("alpha", "Weighted counts for a weight sequence or partitioned color set");
  std::string weights_text;
  std::string blocks_text;
  std::string alpha_graph;
  int alpha_nmax = -1;
  auto* weights_opt = alpha_cmd->add_option("--weights", weights_text, "a0,a1,...");
  auto* blocks_opt = alpha_cmd->add_option("--blocks", blocks_text, "Class sizes s0,s1,...");
  weights_opt->excludes(blocks_opt);
  alpha_cmd->add_option("--nmax", alpha_nmax, "Largest n (default: number of weights)")
      ->check(CLI::NonNegativeNumber);
  alpha_cmd->add_option("--graph", alpha_graph, "Evaluate the weighted chromatic function of this graph");

  // mode
  auto* mode_cmd = app.add_subcommand("mode", "Darroch estimate of the largest coefficient of prod(1 + a_j t)");
  std::string mode_weights;
  mode_cmd->add_option("--weights", mode_weights, "a0,a1,... (nonnegative)")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run every oracle-equivalence sweep");
  VerifyConfig verify_config;
  verify_cmd->add_option("--max-n", verify_config.max_n, "Largest graph order")->capture_default_str()
      ->check(CLI::Range(0, 6));
  verify_cmd->add_option("--max-k", verify_config.max_k, "Largest color count")->capture_default_str()
      ->check(CLI::Range(0, 4));
  verify_cmd->add_option("--seed", verify_config.seed, "Seed for the random graphs and weights")
      ->capture_default_str();

  // gain
  auto* gain_cmd = app.add_subcommand("gain", "Permutation gain graphs: count, expand, probe");
  std::string gain_file;
  std::string gain_graph;
  int gain_k = -1;
  std::string probe_edge;
  bool emit = false;
  auto* gain_file_opt = gain_cmd->add_option("--gain", gain_file, "Gain-graph file ('n k' header)");
  auto* gain_graph_opt = gain_cmd->add_option("--graph", gain_graph, "Simple graph to expand");
  gain_file_opt->excludes(gain_graph_opt);
  gain_cmd->add_option("--k", gain_k, "Gain degree for --graph")->check(CLI::NonNegativeNumber);
  gain_cmd->add_option("--probe", probe_edge, "Deletion-contraction probe on edge u,v of --graph");
  gain_cmd->add_flag("--emit", emit, "Print the S_k-expansion of --graph in gain-graph format");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("setchroma");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  const Format format = format_name == "json" ? Format::kJson : Format::kTsv;
  const auto started = std::chrono::steady_clock::now();

  int code = 0;
  try {
    if (urns->parsed()) {
      if (!grid.empty()) {
        if (grid[0] < 0 || grid[1] < 0) throw DomainError("--grid values must be nonnegative");
        write_urns_grid(out, format, grid[0], grid[1]);
      } else {
        if (urns_k < 0) throw DomainError("urns needs --k or --grid");
        write_urns_column(out, format, urns_k, urns_nmax < 0 ? urns_k + 1 : urns_nmax);
      }
    } else if (graph_cmd->parsed()) {
      const SimpleGraph g = load_graph(graph_file);
      Record rec("graph", {{"graph", graph_file}, {"k", graph_k}, {"structure", graph_json(g)}});
      rec.add("vertices", std::to_string(g.order()), g.order());
      rec.add("edges", std::to_string(g.size()), g.size());
      rec.add("k", std::to_string(graph_k), graph_k);
      rec.add("set_chromatic", set_chromatic(g, graph_k));
      rec.write(out, format);
    } else if (alpha_cmd->parsed()) {
      if (weights_text.empty() && blocks_text.empty()) throw DomainError("alpha needs --weights or --blocks");
      const bool blocks = !blocks_text.empty();
      const std::vector<BigCount> values = parse_list(blocks ? blocks_text : weights_text);
      const WeightSequence alpha = blocks ? WeightSequence(BlockSizeProfile(values).sizes()) : WeightSequence(values);
      Json inputs{{blocks ? "blocks" : "weights", json_list(values)}};
      if (!alpha_graph.empty()) {
        const SimpleGraph g = load_graph(alpha_graph);
        inputs["graph"] = alpha_graph;
        inputs["structure"] = graph_json(g);
        Record rec("alpha", inputs);
        rec.add(blocks ? "partitioned_set_chromatic" : "weighted_chromatic",
                blocks ? partitioned_set_chromatic(g, BlockSizeProfile(values)) : weighted_chromatic(g, alpha));
        rec.write(out, format);
      } else {
        const int n_max = alpha_nmax < 0 ? static_cast<int>(values.size()) : alpha_nmax;
        inputs["nmax"] = n_max;
        write_sequence(out, format, "alpha", inputs, "chi_n", weighted_injective_counts(alpha, n_max));
      }
    } else if (mode_cmd->parsed()) {
      const std::vector<BigCount> values = parse_list(mode_weights);
      const WeightSequence alpha(values);
      const ModeEstimate estimate = darroch_mode_estimate(alpha);
      const auto poly = product_linear_factors(alpha);
      const std::vector<BigCount> coeffs(poly.coefficients().begin(), poly.coefficients().end());
      const auto argmax = argmax_indices(coeffs);
      bool inside = true;
      for (std::size_t m : argmax) {
        inside = inside && std::find(estimate.candidates.begin(), estimate.candidates.end(),
                                     static_cast<long>(m)) != estimate.candidates.end();
      }
      std::string candidates_tsv;
      Json candidates_json = Json::array();
      for (long c : estimate.candidates) {
        candidates_tsv += (candidates_tsv.empty() ? "" : ",") + std::to_string(c);
        candidates_json.push_back(c);
      }
      std::string argmax_tsv;
      Json argmax_json = Json::array();
      for (std::size_t m : argmax) {
        argmax_tsv += (argmax_tsv.empty() ? "" : ",") + std::to_string(m);
        argmax_json.push_back(m);
      }
      Record rec("mode", {{"weights", json_list(values)}});
      rec.add("M", to_decimal(estimate.center), to_decimal(estimate.center));
      rec.add("M_decimal", decimal_approx(estimate.center, 6), decimal_approx(estimate.center, 6));
      rec.add("candidates", candidates_tsv, candidates_json);
      rec.add("coefficients", join(coeffs), json_list(coeffs));
      rec.add("argmax", argmax_tsv, argmax_json);
      rec.add("argmax_in_candidates", inside ? "true" : "false", inside);
      rec.write(out, format);
    } else if (verify_cmd->parsed()) {
      verify_config.inject_fault = env.inject_fault;
      const VerifyReport report = run_verification(verify_config);
      if (format == Format::kJson) {
        Json checks = Json::array();
        for (const auto& c : report.checks) {
          Json item{{"name", c.name}, {"cases", c.cases}, {"mismatches", c.mismatches},
                    {"verdict", c.passed() ? "PASS" : "FAIL"}};
          if (!c.passed()) item["first_mismatch"] = c.first_mismatch;
          checks.push_back(std::move(item));
        }
        Json doc;
        doc["command"] = "verify";
        doc["inputs"] = {{"max_n", verify_config.max_n}, {"max_k", verify_config.max_k},
                         {"seed", verify_config.seed}};
        doc["outputs"] = {{"checks", checks}, {"verdict", report.all_passed() ? "PASS" : "FAIL"}};
        out << doc.dump(2) << '\n';
      } else {
        for (const auto& c : report.checks) {
          out << (c.passed() ? "PASS" : "FAIL") << '\t' << c.name << "\tcases=" << c.cases
              << "\tmismatches=" << c.mismatches;
          if (!c.passed()) out << "\tfirst: " << c.first_mismatch;
          out << '\n';
        }
        out << "verdict\t" << (report.all_passed() ? "PASS" : "FAIL") << '\n';
      }
      code = report.all_passed() ? 0 : 1;
    } else if (gain_cmd->parsed()) {
      if (!gain_file.empty()) {
        if (!probe_edge.empty() || emit) throw DomainError("--probe and --emit need --graph");
        const PermutationGainGraph phi = parse_gain_graph(read_file(gain_file));
        Record rec("gain", {{"gain", gain_file}});
        rec.add("vertices", std::to_string(phi.order()), phi.order());
        rec.add("edges", std::to_string(phi.edges().size()), phi.edges().size());
        rec.add("k", std::to_string(phi.gain_degree()), phi.gain_degree());
        rec.add("proper_set_colorings", count_proper_set_colorings(phi));
        rec.write(out, format);
      } else {
        if (gain_graph.empty() || gain_k < 0) throw DomainError("gain needs --gain FILE, or --graph and --k");
        const SimpleGraph d = load_graph(gain_graph);
        Json inputs{{"graph", gain_graph}, {"k", gain_k}, {"structure", graph_json(d)}};
        if (!probe_edge.empty()) {
          const Edge e = parse_edge_flag(probe_edge);
          inputs["probe"] = {e.u, e.v};
          const auto report = deletion_contraction_probe(d, e, gain_k);
          Record rec("gain", inputs);
          rec.add("edge", std::to_string(e.u) + " " + std::to_string(e.v), Json{e.u, e.v});
          rec.add("lhs", report.lhs);
          rec.add("deleted", report.deleted);
          rec.add("contracted", report.contracted);
          rec.add("rhs", report.rhs);
          rec.add("holds", report.holds ? "true" : "false", report.holds);
          rec.write(out, format);
        } else {
          const PermutationGainGraph phi = sk_expansion(d, gain_k);
          if (emit) {
            out << to_gain_text(phi);
          } else {
            Record rec("gain", inputs);
            rec.add("vertices", std::to_string(phi.order()), phi.order());
            rec.add("edges", std::to_string(phi.edges().size()), phi.edges().size());
            rec.add("k", std::to_string(gain_k), gain_k);
            rec.add("proper_set_colorings", count_proper_set_colorings(phi));
            rec.write(out, format);
          }
        }
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  err << "# elapsed " << std::fixed << std::setprecision(3) << elapsed << " s\n";
  return code;
}

}  // namespace setchroma::cli

#include "cli.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "mstv/error.hpp"
#include "mstv/generate.hpp"
#include "mstv/io.hpp"

namespace mstv::cli {
namespace {

nlohmann::ordered_json indices_json(const std::vector<EdgeId>& ids) {
  auto arr = nlohmann::ordered_json::array();
  for (EdgeId id : ids) arr.push_back(id);
  return arr;
}

void print_text_report(std::ostream& out, const nlohmann::ordered_json& r) {
  out << "status: " << r["status"].get<std::string>() << "\n";
  if (!r["witness"].is_null()) {
    const auto& w = r["witness"];
    out << "witness: swap in edge " << w["in_edge"] << ", swap out edge " << w["out_edge"]
        << ", weight change " << w["delta"] << "\n";
    out << "improved tree:";
    for (const auto& id : r["improved_tree_indices"]) out << " " << id;
    out << "\n";
  }
  const auto& q = r["queries"];
  out << "queries: classical " << q["classical"] << ", quantum " << q["quantum"]
      << ", grover iterations " << q["grover_iterations"] << "\n";
  out << "mode: " << r["mode"].get<std::string>();
  if (r["analytic_mode"].get<bool>()) out << " (analytic mode)";
  out << "\nseed: " << r["seed"] << "\nn: " << r["n"] << "\nm: " << r["m"] << "\n";
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(read_file(cfg.graph_path));
  const SpanningTree t = load_tree(read_file(cfg.tree_path), g);

  const OracleModel model =
      cfg.mode == VerifyMode::Adjacency ? OracleModel::AdjacencyMatrix : OracleModel::EdgeList;
  InstrumentedOracle oracle(g, model);
  VerifyResult result;
  if (cfg.mode == VerifyMode::ClassicalOnly) {
    result = classical_verify(g, t, oracle);
  } else {
    QuantumConfig qc;
    qc.delta = cfg.delta;
    qc.statevector_cap = cfg.statevector_cap;
    result = quantum_verify(g, t, oracle, cfg.mode, cfg.seed, qc);
  }

  const auto report = verify_report(g, result, cfg.seed);
  if (cfg.output == OutputFormat::Json) {
    out << report.dump(2) << "\n";
  } else {
    print_text_report(out, report);
  }
  return result.verdict.minimal() ? kExitMinimal : kExitNotMinimal;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  file << content;
  if (!file) throw Error(ErrorKind::InvalidArgument, "failed writing '" + path + "'");
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::mt19937_64 rng(cfg.seed);
  const Graph g = random_connected_graph(cfg.n, cfg.m, {cfg.weight_lo, cfg.weight_hi}, rng);
  SpanningTree tree = kruskal_mst(g);
  if (cfg.tree_kind == TreeKind::Random) {
    tree = random_spanning_tree(g, rng);
  } else if (cfg.tree_kind == TreeKind::Perturbed) {
    if (auto perturbed = perturb_tree(g, tree, rng)) {
      tree = std::move(*perturbed);
    } else {
      err << "warning: no weight-increasing swap exists; writing the minimum spanning tree\n";
    }
  }

  const std::string graph_path = cfg.out_prefix + ".graph";
  const std::string tree_path = cfg.out_prefix + ".tree";
  write_file(graph_path, serialize_graph(g));
  write_file(tree_path, serialize_tree_indices(tree));

  if (cfg.output == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["graph"] = graph_path;
    j["tree"] = tree_path;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["tree_weight"] = tree_weight(g, tree);
    out << j.dump(2) << "\n";
  } else {
    out << "wrote " << graph_path << " and " << tree_path << "\n";
  }
  return 0;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(read_file(cfg.graph_path));
  const SpanningTree mst = kruskal_mst(g);
  const Weight weight = tree_weight(g, mst);
  const std::vector<EdgeId> ids = mst.sorted_ids();
  if (cfg.output == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["weight"] = weight;
    j["indices"] = indices_json(ids);
    out << j.dump(2) << "\n";
  } else {
    out << "weight " << format_weight(weight) << "\nindices";
    for (EdgeId id : ids) out << " " << id;
    out << "\n";
  }
  return 0;
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::InvalidArgument, "--weights expects LO:HI");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo_text = text.substr(0, colon), hi_text = text.substr(colon + 1);
    const double lo = std::stod(lo_text, &used_lo);
    const double hi = std::stod(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "--weights expects LO:HI, got '" + text + "'");
  }
}

}  // namespace

nlohmann::ordered_json verify_report(const Graph& g, const VerifyResult& result, std::uint64_t seed) {
  const Verdict& v = result.verdict;
  const QueryReport& q = result.report;
  nlohmann::ordered_json j;
  j["status"] = v.minimal() ? "minimal" : "not_minimal";
  if (v.witness) {
    j["witness"] = {{"in_edge", v.witness->violating_edge_id},
                    {"out_edge", v.witness->replaced_edge_id},
                    {"delta", v.weight_delta}};
    j["improved_tree_indices"] = indices_json(v.improved_tree->sorted_ids());
  } else {
    j["witness"] = nullptr;
    j["improved_tree_indices"] = nullptr;
  }
  j["queries"] = {{"classical", q.classical_weight_queries},
                  {"quantum", q.quantum_oracle_applications},
                  {"grover_iterations", q.grover_iterations}};
  j["mode"] = std::string(to_string(q.mode));
  j["analytic_mode"] = q.analytic_mode;
  j["seed"] = seed;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Minimum spanning tree verification with Borůvka trees and simulated Grover search",
               "mstv"};
  app.require_subcommand(1);

  const std::map<std::string, VerifyMode> modes{{"classical", VerifyMode::ClassicalOnly},
                                                {"adjacency", VerifyMode::Adjacency},
                                                {"edgelist", VerifyMode::EdgeList}};
  const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::Json},
                                                    {"text", OutputFormat::Text}};
  const std::map<std::string, TreeKind> kinds{
      {"mst", TreeKind::Mst}, {"perturbed", TreeKind::Perturbed}, {"random", TreeKind::Random}};

  auto* verify = app.add_subcommand("verify", "Check whether a spanning tree has minimum weight");
  verify->add_option("--graph", cfg.graph_path, "Graph file")->required();
  verify->add_option("--tree", cfg.tree_path, "Tree file")->required();
  std::string mode = "classical";
  std::string output = "json";
  std::string kind = "mst";
  verify->add_option("--mode", mode, "classical | adjacency | edgelist")
      ->check(CLI::IsMember(modes));
  verify->add_option("--seed", cfg.seed, "RNG seed");
  verify->add_option("--delta", cfg.delta, "Completeness error, in (0, 0.5)");
  verify->add_option("--output", output, "json | text")->check(CLI::IsMember(formats));
  verify->add_option("--statevector-cap", cfg.statevector_cap,
                     "Largest simulated search domain (power of two)");

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", cfg.n, "Vertex count")->required();
  gen->add_option("--m", cfg.m, "Edge count")->required();
  std::string weights = "1:100";
  gen->add_option("--weights", weights, "Integer weight range LO:HI");
  gen->add_option("--tree-kind", kind, "mst | perturbed | random")->check(CLI::IsMember(kinds));
  gen->add_option("--seed", cfg.seed, "RNG seed");
  gen->add_option("--out-prefix", cfg.out_prefix, "Writes PREFIX.graph and PREFIX.tree")->required();
  gen->add_option("--output", output, "json | text")->check(CLI::IsMember(formats));

  auto* oracle = app.add_subcommand("oracle", "Print the Kruskal minimum spanning tree");
  oracle->add_option("--graph", cfg.graph_path, "Graph file")->required();
  oracle->add_option("--output", output, "json | text")->check(CLI::IsMember(formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  cfg.mode = modes.at(mode);
  cfg.output = formats.at(output);
  cfg.tree_kind = kinds.at(kind);
  try {
    if (*verify) {
      if (!(cfg.delta > 0.0 && cfg.delta < 0.5)) {
        throw Error(ErrorKind::InvalidArgument, "--delta must lie in (0, 0.5)");
      }
      if (!std::has_single_bit(cfg.statevector_cap)) {
        throw Error(ErrorKind::InvalidArgument, "--statevector-cap must be a power of two");
      }
      return cmd_verify(cfg, out);
    }
    if (*gen) {
      std::tie(cfg.weight_lo, cfg.weight_hi) = parse_range(weights);
      return cmd_gen(cfg, out, err);
    }
    return cmd_oracle(cfg, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace mstv::cli

// Command-line driver: generate instances, run the distributed algorithms
// round by round, verify assignments, trace the lower-bound chain, run the
// brute-force oracles, export DOT.
//
// Exit codes: 0 success, 1 verification failed, 2 usage or parse error,
// 3 algorithm fault, 4 round budget exceeded.

#include "fracmatch/algorithms.hpp"
#include "fracmatch/gen.hpp"
#include "fracmatch/graph.hpp"
#include "fracmatch/graph_io.hpp"
#include "fracmatch/lower_bound.hpp"
#include "fracmatch/oracle.hpp"
#include "fracmatch/rational.hpp"
#include "fracmatch/sim.hpp"
#include "fracmatch/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace fracmatch;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFault = 3;
constexpr int kExitBudget = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out.good()) throw UsageError("cannot write " + path);
}

PortGraph load_graph_or_die(const std::string& path) {
  try {
    return load_graph(path);
  } catch (const std::exception& ex) {
    throw UsageError("loading " + path + ": " + ex.what());
  }
}

// Colors file: one "<node> <0|1>" pair per line, '#' comments.
std::map<NodeId, int> parse_colors_file(const std::string& path, const PortGraph& g) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::map<NodeId, int> colors;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    NodeId v;
    int c;
    if (!(ls >> v)) continue;
    if (!(ls >> c) || (c != 0 && c != 1))
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected '<node> <0|1>'");
    if (!g.has_node(v))
      throw UsageError(path + ":" + std::to_string(lineno) + ": unknown node " + std::to_string(v));
    colors[v] = c;
  }
  for (NodeId v : g.nodes())
    if (!colors.count(v)) throw UsageError(path + ": no color for node " + std::to_string(v));
  for (const Edge& e : g.edges())
    if (!e.loop() && colors[e.u] == colors[e.v])
      throw UsageError(path + ": nodes " + std::to_string(e.u) + " and " + std::to_string(e.v) +
                       " are adjacent but share a color");
  return colors;
}

std::map<NodeId, int> auto_two_color(const PortGraph& g) {
  auto dense = two_color(g);
  if (!dense) throw UsageError("graph is not bipartite; supply --colors");
  std::map<NodeId, int> colors;
  for (int i = 0; i < g.node_count(); ++i) colors[g.node_at(i)] = (*dense)[i];
  return colors;
}

nlohmann::ordered_json class_histogram(const EdgeAssignment& x) {
  std::map<int, int> hist;
  for (const Rat& v : x) ++hist[class_index(v)];
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [cls, count] : hist) j[std::to_string(cls)] = count;
  return j;
}

// ---- generate ----

int cmd_generate(const std::string& kind, int n, int delta, int d, int T, std::uint64_t seed,
                 std::optional<long long> edges, const std::string& out) {
  if (kind == "path") {
    write_text(out, write_graph(gen_path(n, seed)));
  } else if (kind == "cycle") {
    write_text(out, write_graph(gen_cycle(n, seed)));
  } else if (kind == "random") {
    std::optional<int> m;
    if (edges) m = static_cast<int>(*edges);
    write_text(out, write_graph(gen_random(n, delta, seed, m)));
  } else if (kind == "g0") {
    write_text(out, write_graph(make_G0(d)));
  } else if (kind == "lb-chain") {
    // Drive the full harness with the bundled algorithm and dump each level.
    auto alg = mfm(2 * d);
    std::optional<int> T_opt;
    if (T > 0) T_opt = T;
    LBChainReport report = lb_harness(*alg, Model::PN, d, T_opt);
    std::string prefix = out.empty() || out == "-" ? "lb_chain" : out;
    for (const LBLevel& level : report.levels)
      write_text(prefix + "_level" + std::to_string(level.index) + ".graph",
                 write_graph(level.graph));
    std::cout << lb_report_json(report) << "\n";
    if (!report.ok) return kExitFault;
  } else {
    throw UsageError("unknown kind '" + kind + "' (path|cycle|random|g0|lb-chain)");
  }
  return kExitOk;
}

// ---- run ----

int cmd_run(const std::string& graph_path, const std::string& alg_name, int delta,
            const std::string& model_name, int max_rounds, std::uint64_t seed,
            const std::string& colors_path, const std::string& out, const std::string& stats_path,
            const std::string& trace_path) {
  PortGraph g = load_graph_or_die(graph_path);
  Model model = parse_model(model_name);
  auto alg = make_algorithm(alg_name, delta);

  RunOptions opts;
  opts.max_rounds = max_rounds > 0 ? max_rounds : alg->round_budget();
  opts.id_seed = seed;
  if (!colors_path.empty())
    opts.colors = parse_colors_file(colors_path, g);
  else if (alg_name == "proposal-mm")
    opts.colors = auto_two_color(g);

  std::ofstream trace_file;
  if (!trace_path.empty()) {
    trace_file.open(trace_path);
    if (!trace_file) throw UsageError("cannot write " + trace_path);
    opts.trace = &trace_file;
  }

  RunResult res = has_loops(g) ? run_loopy(g, *alg, model, opts) : run(g, *alg, model, opts);

  write_text(out, write_assignment(g, res.assignment));

  nlohmann::ordered_json stats;
  stats["algorithm"] = alg->name();
  stats["model"] = model_name;
  stats["nodes"] = g.node_count();
  stats["edges"] = g.edge_count();
  stats["rounds"] = res.rounds;
  stats["round_budget"] = alg->round_budget();
  stats["messages"] = res.messages;
  stats["class_histogram"] = class_histogram(res.assignment);
  std::string stats_text = stats.dump(2) + "\n";
  if (!stats_path.empty())
    write_text(stats_path, stats_text);
  else
    std::cerr << stats_text;
  return kExitOk;
}

// ---- verify ----

int cmd_verify(const std::string& graph_path, const std::string& assignment_path,
               const std::string& value_set) {
  PortGraph g = load_graph_or_die(graph_path);
  EdgeAssignment x;
  try {
    x = load_assignment(assignment_path, g);
  } catch (const std::exception& ex) {
    throw UsageError("loading " + assignment_path + ": " + ex.what());
  }
  std::optional<ValueSet> set;
  if (!value_set.empty()) {
    set = ValueSet::parse(value_set);
    if (!set) throw UsageError("cannot parse value set '" + value_set + "' (S(d) or R<=n)");
  }
  VerifyReport report = verify(g, x, set);
  std::cout << verify_report_json(report) << "\n";
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

// ---- lb-harness ----

int cmd_lb_harness(const std::string& alg_name, int delta, int d, int T,
                   const std::string& model_name, const std::string& dump_prefix) {
  Model model = parse_model(model_name);
  if (model == Model::LOCAL) throw UsageError("lb-harness runs under pn or po");
  if (delta <= 0) delta = 2 * d;
  auto alg = make_algorithm(alg_name, delta);
  std::optional<int> T_opt;
  if (T > 0) T_opt = T;
  LBChainReport report = lb_harness(*alg, model, d, T_opt);
  if (!dump_prefix.empty())
    for (const LBLevel& level : report.levels)
      write_text(dump_prefix + "_level" + std::to_string(level.index) + ".graph",
                 write_graph(level.graph));
  std::cout << lb_report_json(report) << "\n";
  return report.ok ? kExitOk : kExitFault;
}

// ---- oracle ----

std::vector<Rat> parse_value_list(const std::string& text) {
  if (auto set = ValueSet::parse(text)) {
    if (set->kind == ValueSet::Kind::Dyadic) return dyadic_values(set->param);
    throw UsageError("value list must be S(d) or an explicit comma list");
  }
  std::vector<Rat> values;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto r = Rat::parse(item);
    if (!r) throw UsageError("cannot parse value '" + item + "'");
    values.push_back(*r);
  }
  if (values.empty()) throw UsageError("empty value list");
  return values;
}

int cmd_oracle_mfm_search(const std::string& graph_path, const std::string& values_text) {
  PortGraph g = load_graph_or_die(graph_path);
  auto solutions = exhaustive_mfm_search(g, parse_value_list(values_text));
  std::cout << "solutions " << solutions.size() << "\n";
  for (const EdgeAssignment& x : solutions) std::cout << write_assignment(g, x) << "\n";
  return kExitOk;
}

int cmd_oracle_obs32(int n, const std::string& target_text, int r, int rp, int max_denom) {
  auto target = Rat::parse(target_text);
  if (!target) throw UsageError("cannot parse target '" + target_text + "'");
  Obs32Report report = obs32_witness_search(n, *target, r, rp, max_denom);
  nlohmann::ordered_json j;
  j["holds"] = report.holds;
  j["grid_size"] = report.grid_size;
  j["tuples_examined"] = report.tuples_examined;
  if (!report.holds) {
    auto dump = [](const std::vector<Rat>& vs) {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (const Rat& v : vs) a.push_back(v.str());
      return a;
    };
    j["counterexample"] = {{"ells", dump(*report.counterexample_ells)},
                           {"xs", dump(*report.counterexample_xs)}};
  }
  std::cout << j.dump(2) << "\n";
  return report.holds ? kExitOk : kExitVerifyFailed;
}

// ---- export-dot ----

int cmd_export_dot(const std::string& graph_path, const std::string& assignment_path,
                   const std::string& out) {
  PortGraph g = load_graph_or_die(graph_path);
  std::optional<EdgeAssignment> x;
  if (!assignment_path.empty()) {
    try {
      x = load_assignment(assignment_path, g);
    } catch (const std::exception& ex) {
      throw UsageError("loading " + assignment_path + ": " + ex.what());
    }
  }
  write_text(out, write_dot(g, x));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal fractional matching toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "emit an instance in the graph text format");
  std::string gen_kind, gen_out = "-";
  int gen_n = 4, gen_delta = 3, gen_d = 2, gen_T = 0;
  std::uint64_t gen_seed = 1;
  std::optional<long long> gen_edges;
  gen->add_option("kind", gen_kind, "path | cycle | random | g0 | lb-chain")->required();
  gen->add_option("--n", gen_n, "node count (path/cycle/random)");
  gen->add_option("--delta", gen_delta, "degree bound (random)");
  gen->add_option("--d", gen_d, "loop parameter (g0/lb-chain)");
  gen->add_option("--T", gen_T, "chain copies parameter override (lb-chain)");
  gen->add_option("--seed", gen_seed, "rng seed");
  gen->add_option("--edges", gen_edges, "target edge count (random)");
  gen->add_option("--out,-o", gen_out, "output path, or prefix for lb-chain ('-' = stdout)");

  // run
  auto* run_cmd = app.add_subcommand("run", "run an algorithm and write its assignment");
  std::string run_graph, run_alg = "mfm", run_model = "pn", run_colors, run_out = "-",
              run_stats, run_trace;
  int run_delta = 0, run_max_rounds = 0;
  std::uint64_t run_seed = 1;
  run_cmd->add_option("--graph,-g", run_graph, "graph file")->required();
  run_cmd->add_option("--alg,-a", run_alg, "mfm | base2 | almost-sat | proposal-mm");
  run_cmd->add_option("--delta", run_delta, "globally known degree bound")->required();
  run_cmd->add_option("--model,-m", run_model, "pn | po | local");
  run_cmd->add_option("--max-rounds", run_max_rounds, "round budget (default: algorithm's)");
  run_cmd->add_option("--seed", run_seed, "identifier seed (local model)");
  run_cmd->add_option("--colors", run_colors, "2-coloring file for proposal-mm");
  run_cmd->add_option("--out,-o", run_out, "assignment output ('-' = stdout)");
  run_cmd->add_option("--stats", run_stats, "stats JSON output (default: stderr)");
  run_cmd->add_option("--trace", run_trace, "per-round outbox digest log");

  // verify
  auto* ver = app.add_subcommand("verify", "check an assignment against a graph");
  std::string ver_graph, ver_assignment, ver_set;
  ver->add_option("--graph,-g", ver_graph, "graph file")->required();
  ver->add_option("--assignment,-x", ver_assignment, "assignment file")->required();
  ver->add_option("--value-set", ver_set, "S(d) or R<=n membership check");

  // lb-harness
  auto* lb = app.add_subcommand("lb-harness", "run the denominator-growth chain");
  std::string lb_alg = "mfm", lb_model = "pn", lb_dump;
  int lb_delta = 0, lb_d = 2, lb_T = 0;
  lb->add_option("--alg,-a", lb_alg, "algorithm to probe");
  lb->add_option("--delta", lb_delta, "degree bound passed to the algorithm (default 2d)");
  lb->add_option("--d", lb_d, "chain depth: levels 0..d-1")->required();
  lb->add_option("--T", lb_T, "override the per-level copies parameter");
  lb->add_option("--model,-m", lb_model, "pn | po");
  lb->add_option("--dump-prefix", lb_dump, "write each level's graph to <prefix>_levelN.graph");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  oracle->require_subcommand(1);
  auto* omfm = oracle->add_subcommand("mfm-search", "enumerate all maximal fractional matchings");
  std::string omfm_graph, omfm_values = "0,1/2,1";
  omfm->add_option("--graph,-g", omfm_graph, "graph file")->required();
  omfm->add_option("--values", omfm_values, "S(d) or comma-separated rationals");
  auto* oobs = oracle->add_subcommand("obs32", "parity witness search over the Farey grid");
  std::string oobs_target;
  int oobs_n = 1, oobs_r = 1, oobs_rp = 1, oobs_q = 24;
  oobs->add_option("--n", oobs_n, "class of the target")->required();
  oobs->add_option("--target", oobs_target, "target value, e.g. 1/2")->required();
  oobs->add_option("--r", oobs_r, "number of loop slots");
  oobs->add_option("--rp", oobs_rp, "number of plain-edge slots");
  oobs->add_option("--max-denom", oobs_q, "grid denominator bound");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "write a Graphviz rendering");
  std::string dot_graph, dot_assignment, dot_out = "-";
  dot->add_option("--graph,-g", dot_graph, "graph file")->required();
  dot->add_option("--assignment,-x", dot_assignment, "optional assignment to display");
  dot->add_option("--out,-o", dot_out, "output path ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed())
      return cmd_generate(gen_kind, gen_n, gen_delta, gen_d, gen_T, gen_seed, gen_edges, gen_out);
    if (run_cmd->parsed())
      return cmd_run(run_graph, run_alg, run_delta, run_model, run_max_rounds, run_seed,
                     run_colors, run_out, run_stats, run_trace);
    if (ver->parsed()) return cmd_verify(ver_graph, ver_assignment, ver_set);
    if (lb->parsed()) return cmd_lb_harness(lb_alg, lb_delta, lb_d, lb_T, lb_model, lb_dump);
    if (oracle->parsed()) {
      if (omfm->parsed()) return cmd_oracle_mfm_search(omfm_graph, omfm_values);
      if (oobs->parsed()) return cmd_oracle_obs32(oobs_n, oobs_target, oobs_r, oobs_rp, oobs_q);
    }
    if (dot->parsed()) return cmd_export_dot(dot_graph, dot_assignment, dot_out);
  } catch (const SimBudgetError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const SimFaultError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitFault;
  } catch (const TheoryViolationError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitFault;
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

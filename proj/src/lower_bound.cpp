#include "fracmatch/lower_bound.hpp"

#include "fracmatch/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace fracmatch {

PortGraph make_G0(int d) {
  if (d < 1) throw std::invalid_argument("make_G0: d must be >= 1");
  std::vector<Edge> loops;
  for (int k = 0; k < d; ++k) loops.push_back({0, 2 * k + 1, 0, 2 * k + 2, Dir::uv});
  return PortGraph({0}, loops);
}

namespace {

std::vector<EdgeId> loops_at(const PortGraph& g, NodeId v) {
  std::vector<EdgeId> out;
  int deg = g.degree(v);
  for (int p = 1; p <= deg; ++p) {
    EdgeId e = g.port(v, p)->edge;
    if (g.edges()[e].loop() && (out.empty() || out.back() != e)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

FineLoop find_fine_loop(const PortGraph& g, const EdgeAssignment& x, NodeId root, int threshold) {
  if (x.size() != static_cast<std::size_t>(g.edge_count()))
    throw std::invalid_argument("find_fine_loop: assignment size mismatch");
  if (!g.has_node(root)) throw std::invalid_argument("find_fine_loop: unknown root");
  if (threshold < 0) throw std::invalid_argument("find_fine_loop: negative threshold");

  NodeId at = root;
  EdgeId arrival = -1;
  int n = threshold;
  std::string stall;

  for (int steps = 0; steps <= g.node_count(); ++steps) {
    for (EdgeId e : loops_at(g, at)) {
      int cls = class_index(x[e]);
      if (cls > n) return {at, e, cls, false, ""};
    }
    EdgeId next = -1;
    int next_cls = 0;
    int deg = g.degree(at);
    for (int p = 1; p <= deg; ++p) {
      EdgeId e = g.port(at, p)->edge;
      if (e == arrival || g.edges()[e].loop()) continue;
      int cls = class_index(x[e]);
      if (cls >= n && (next < 0 || e < next)) {
        next = e;
        next_cls = cls;
      }
    }
    if (next < 0) {
      stall = "invariant walk stalled at node " + std::to_string(at) + " with path class " +
              std::to_string(n);
      break;
    }
    n = next_cls;
    arrival = next;
    const Edge& e = g.edges()[next];
    at = e.u == at ? e.v : e.u;
  }
  if (stall.empty()) stall = "invariant walk failed to terminate";

  // Recovery sweep: the conclusion (some loop of class > threshold) is what
  // later levels need; find it directly and surface the walk discrepancy.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!g.edges()[e].loop()) continue;
    int cls = class_index(x[e]);
    if (cls > threshold)
      return {g.edges()[e].u, e, cls, true, stall + "; global scan recovered"};
  }
  throw TheoryViolationError("find_fine_loop: no loop of class > " + std::to_string(threshold) +
                             " anywhere (" + stall + ")");
}

BuildNextResult build_next(const PortGraph& g_prev, NodeId v_prev, EdgeId loop_id, int T) {
  if (loop_id < 0 || loop_id >= g_prev.edge_count())
    throw std::invalid_argument("build_next: no such edge");
  const Edge& removed = g_prev.edges()[loop_id];
  if (!removed.loop() || removed.u != v_prev)
    throw std::invalid_argument("build_next: edge is not a loop at the given node");
  if (T < 1) throw std::invalid_argument("build_next: T must be >= 1");

  const int N = g_prev.node_count();
  const int K = 2 * T + 3;
  const int p_out = removed.pu;
  const int p_in = removed.pv;
  const int vi = g_prev.index_of(v_prev);

  std::vector<NodeId> nodes(static_cast<std::size_t>(K) * N);
  for (int k = 0; k < K; ++k)
    for (int j = 0; j < N; ++j) nodes[static_cast<std::size_t>(k) * N + j] = k * N + j;

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(K) * (g_prev.edge_count() - 1) + K - 1);
  for (int k = 0; k < K; ++k)
    for (EdgeId e = 0; e < g_prev.edge_count(); ++e) {
      if (e == loop_id) continue;
      const Edge& ed = g_prev.edges()[e];
      edges.push_back({k * N + g_prev.index_of(ed.u), ed.pu, k * N + g_prev.index_of(ed.v),
                       ed.pv, ed.dir});
    }
  for (int k = 0; k + 1 < K; ++k)
    edges.push_back({k * N + vi, p_out, (k + 1) * N + vi, p_in, Dir::uv});

  // Chain ends: copy 1 never receives (in-slot free), copy K never sends
  // (out-slot free); close the gap so ports stay contiguous.
  auto compact = [&edges](NodeId node, int freed_port) {
    for (Edge& e : edges) {
      if (e.u == node && e.pu > freed_port) --e.pu;
      if (e.v == node && e.pv > freed_port) --e.pv;
    }
  };
  compact(0 * N + vi, p_in);
  compact((K - 1) * N + vi, p_out);

  BuildNextResult result{PortGraph(std::move(nodes), std::move(edges)), (T + 1) * N + vi};
  require_valid(result.graph, "build_next");
  if (!is_forest_ignoring_loops(result.graph))
    throw std::logic_error("build_next: tree structure lost");
  if (result.graph.max_degree() > g_prev.max_degree())
    throw std::logic_error("build_next: degree bound grew");
  return result;
}

LBChainReport lb_harness(const AlgorithmSpec& alg, Model model, int d,
                         std::optional<int> T_override) {
  if (d < 1) throw std::invalid_argument("lb_harness: d must be >= 1");
  LBChainReport report;
  report.d = d;

  PortGraph g = make_G0(d);
  NodeId root = g.nodes()[0];

  for (int i = 0; i < d; ++i) {
    LBLevel level{.index = i, .graph = g, .root = root};
    level.nodes = g.node_count();
    level.edges = g.edge_count();
    level.loops = g.loop_count();

    // P3 bookkeeping: every node must still carry at least d-i loops.
    for (NodeId v : g.nodes())
      if (static_cast<int>(loops_at(g, v).size()) < d - i) {
        report.failure = "level " + std::to_string(i) + ": node " + std::to_string(v) +
                         " has fewer than " + std::to_string(d - i) + " loops";
        report.levels.push_back(std::move(level));
        return report;
      }

    RunResult res;
    try {
      RunOptions opts;
      opts.max_rounds = 2 * alg.round_budget() + 16;
      res = run_loopy(g, alg, model, opts);
    } catch (const std::exception& ex) {
      report.failure = "level " + std::to_string(i) + ": " + ex.what();
      report.levels.push_back(std::move(level));
      return report;
    }
    level.rounds = res.rounds;

    VerifyReport vr = verify(g, res.assignment);
    level.verify_ok = vr.feasible && vr.maximal;
    if (!level.verify_ok) {
      report.failure = "level " + std::to_string(i) + ": output failed verification (" +
                       std::string(vr.feasible ? "not maximal" : "infeasible") + ")";
      report.levels.push_back(std::move(level));
      return report;
    }

    FineLoop fl;
    try {
      fl = find_fine_loop(g, res.assignment, root, i);
    } catch (const TheoryViolationError& ex) {
      report.failure = "level " + std::to_string(i) + ": " + ex.what();
      report.levels.push_back(std::move(level));
      return report;
    }
    level.fine_node = fl.node;
    level.fine_loop = fl.loop;
    level.loop_value = res.assignment[fl.loop];
    level.loop_class = fl.cls;
    level.fallback_used = fl.used_fallback;
    level.note = fl.note;
    report.max_class = std::max(report.max_class, fl.cls);
    report.levels.push_back(std::move(level));

    if (i + 1 < d) {
      int T = T_override ? *T_override : res.rounds + 2;
      BuildNextResult next = build_next(g, fl.node, fl.loop, T);
      g = std::move(next.graph);
      root = next.root;
    }
  }
  report.ok = true;
  return report;
}

std::string lb_report_json(const LBChainReport& report) {
  nlohmann::ordered_json j;
  j["d"] = report.d;
  j["ok"] = report.ok;
  if (!report.ok) j["failure"] = report.failure;
  j["max_class"] = report.max_class;
  j["levels"] = nlohmann::ordered_json::array();
  for (const LBLevel& level : report.levels) {
    nlohmann::ordered_json lj;
    lj["index"] = level.index;
    lj["nodes"] = level.nodes;
    lj["edges"] = level.edges;
    lj["loops"] = level.loops;
    lj["root"] = level.root;
    lj["rounds"] = level.rounds;
    lj["verify_ok"] = level.verify_ok;
    if (level.fine_loop >= 0) {
      lj["fine_node"] = level.fine_node;
      lj["fine_loop"] = level.fine_loop;
      lj["loop_value"] = level.loop_value.str();
      lj["loop_class"] = level.loop_class;
      lj["fallback_used"] = level.fallback_used;
      if (!level.note.empty()) lj["note"] = level.note;
    }
    j["levels"].push_back(std::move(lj));
  }
  return j.dump(2);
}

}  // namespace fracmatch

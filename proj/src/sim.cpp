#include "fracmatch/sim.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

namespace fracmatch {

Model parse_model(std::string_view text) {
  if (text == "pn") return Model::PN;
  if (text == "po") return Model::PO;
  if (text == "local") return Model::LOCAL;
  throw std::invalid_argument("unknown model '" + std::string(text) + "' (expected pn, po or local)");
}

std::string model_name(Model m) {
  switch (m) {
    case Model::PN: return "pn";
    case Model::PO: return "po";
    case Model::LOCAL: return "local";
  }
  return "?";
}

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t outbox_digest(const Outbox& out) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const auto& [port, msg] : out) {
    std::uint32_t p = static_cast<std::uint32_t>(port);
    h = fnv1a(h, &p, sizeof p);
    h = fnv1a(h, msg.data(), msg.size());
    unsigned char sep = 0xFF;
    h = fnv1a(h, &sep, 1);
  }
  return h;
}

std::vector<std::uint64_t> local_ids(const PortGraph& g, const RunOptions& opts) {
  const int n = g.node_count();
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  if (un > 2'000'000) throw std::invalid_argument("graph too large for the identifier space n^3");
  const std::uint64_t space = un * un * un;
  std::vector<std::uint64_t> ids(n);
  if (opts.ids) {
    std::set<std::uint64_t> seen;
    for (int i = 0; i < n; ++i) {
      auto it = opts.ids->find(g.node_at(i));
      if (it == opts.ids->end())
        throw std::invalid_argument("identifier assignment misses node " + std::to_string(g.node_at(i)));
      if (it->second < 1 || it->second > space)
        throw std::invalid_argument("identifier out of range 1..n^3 for node " + std::to_string(g.node_at(i)));
      if (!seen.insert(it->second).second)
        throw std::invalid_argument("duplicate identifier " + std::to_string(it->second));
      ids[i] = it->second;
    }
  } else {
    std::mt19937_64 rng(opts.id_seed);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < n; ++i) {
      std::uint64_t id;
      do {
        id = 1 + rng() % space;
      } while (!seen.insert(id).second);
      ids[i] = id;
    }
  }
  return ids;
}

void trace_line(std::ostream& os, int round, NodeId node, const Outbox& out, bool halted) {
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx",
                static_cast<unsigned long long>(outbox_digest(out)));
  os << "{\"round\":" << round << ",\"node\":" << node << ",\"digest\":\"" << digest
     << "\",\"outbox\":" << out.size() << ",\"halted\":" << (halted ? "true" : "false") << "}\n";
}

RunResult run_impl(const PortGraph& g, const AlgorithmSpec& alg, Model model,
                   const RunOptions& opts, bool allow_loops) {
  require_valid(g, allow_loops ? "run_loopy" : "run");
  if (!allow_loops && has_loops(g))
    throw std::invalid_argument("graph has loops; use run_loopy");
  if (allow_loops && model == Model::LOCAL)
    throw std::invalid_argument("run_loopy supports pn and po only; LOCAL identifiers have no "
                                "consistent meaning on an unfolding");

  const int n = g.node_count();
  std::vector<std::uint64_t> ids;
  if (model == Model::LOCAL) ids = local_ids(g, opts);

  std::vector<std::unique_ptr<NodeProgram>> prog(n);
  std::vector<bool> active(n, false);
  RunResult result;
  result.halt_rounds.assign(n, 0);

  for (int i = 0; i < n; ++i) {
    NodeId v = g.node_at(i);
    NodeView view;
    view.degree = g.degree(v);
    if (model == Model::PO) {
      view.outgoing.resize(view.degree);
      for (int p = 1; p <= view.degree; ++p) view.outgoing[p - 1] = g.port_outgoing(v, p);
    }
    if (model == Model::LOCAL) view.id = ids[i];
    if (opts.colors) {
      auto it = opts.colors->find(v);
      if (it != opts.colors->end()) view.color = it->second;
    }
    prog[i] = alg.instantiate();
    active[i] = prog[i]->init(view);
  }

  int running = static_cast<int>(std::count(active.begin(), active.end(), true));
  std::vector<Outbox> outboxes(n);
  std::vector<Inbox> inboxes(n);

  for (int round = 1; running > 0; ++round) {
    if (round > opts.max_rounds)
      throw SimBudgetError("round budget of " + std::to_string(opts.max_rounds) +
                           " exhausted with " + std::to_string(running) + " nodes still running");

    for (int i = 0; i < n; ++i) {
      outboxes[i].clear();
      inboxes[i].clear();
      if (!active[i]) continue;
      outboxes[i] = prog[i]->send();
      for (const auto& [port, msg] : outboxes[i]) {
        (void)msg;
        if (port < 1 || port > g.degree(g.node_at(i)))
          throw SimFaultError("node " + std::to_string(g.node_at(i)) +
                              " sent on nonexistent port " + std::to_string(port));
      }
    }

    for (const Edge& e : g.edges()) {
      int iu = g.index_of(e.u), iv = g.index_of(e.v);
      if (active[iv]) {
        auto it = outboxes[iu].find(e.pu);
        if (it != outboxes[iu].end()) {
          inboxes[iv][e.pv] = it->second;
          ++result.messages;
        }
      }
      if (active[iu]) {
        auto it = outboxes[iv].find(e.pv);
        if (it != outboxes[iv].end()) {
          inboxes[iu][e.pu] = it->second;
          ++result.messages;
        }
      }
    }

    for (int i = 0; i < n; ++i) {
      if (!active[i]) continue;
      if (!prog[i]->receive(inboxes[i])) {
        active[i] = false;
        result.halt_rounds[i] = round;
        --running;
      }
    }

    if (opts.trace)
      for (int i = 0; i < n; ++i)
        trace_line(*opts.trace, round, g.node_at(i), outboxes[i], !active[i]);
  }

  result.rounds = 0;
  for (int r : result.halt_rounds) result.rounds = std::max(result.rounds, r);

  std::vector<std::map<int, Rat>> outs(n);
  for (int i = 0; i < n; ++i) {
    outs[i] = prog[i]->output();
    int deg = g.degree(g.node_at(i));
    if (static_cast<int>(outs[i].size()) != deg)
      throw SimFaultError("node " + std::to_string(g.node_at(i)) + " output covers " +
                          std::to_string(outs[i].size()) + " ports, expected " + std::to_string(deg));
    for (const auto& [port, value] : outs[i]) {
      (void)value;
      if (port < 1 || port > deg)
        throw SimFaultError("node " + std::to_string(g.node_at(i)) +
                            " produced output for nonexistent port " + std::to_string(port));
    }
  }

  result.assignment.reserve(g.edge_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges()[id];
    const Rat& a = outs[g.index_of(e.u)].at(e.pu);
    const Rat& b = outs[g.index_of(e.v)].at(e.pv);
    if (!(a == b))
      throw SimFaultError("endpoint outputs disagree on edge " + std::to_string(id) + " (" +
                          a.str() + " vs " + b.str() + ")");
    result.assignment.push_back(a);
  }
  return result;
}

}  // namespace

RunResult run(const PortGraph& g, const AlgorithmSpec& alg, Model model, const RunOptions& opts) {
  return run_impl(g, alg, model, opts, false);
}

RunResult run_loopy(const PortGraph& g, const AlgorithmSpec& alg, Model model,
                    const RunOptions& opts) {
  return run_impl(g, alg, model, opts, true);
}

}  // namespace fracmatch

#include "fracmatch/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fracmatch {

namespace {

Edge normalized(Edge e) {
  if (e.loop()) {
    // Store loops with the outgoing side as (pu) and the incoming side as (pv).
    if (e.dir == Dir::vu) {
      std::swap(e.pu, e.pv);
      e.dir = Dir::uv;
    }
    return e;
  }
  if (e.u > e.v) {
    std::swap(e.u, e.v);
    std::swap(e.pu, e.pv);
    e.dir = e.dir == Dir::uv ? Dir::vu : Dir::uv;
  }
  return e;
}

}  // namespace

PortGraph::PortGraph(std::vector<NodeId> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end())
    throw std::invalid_argument("duplicate node id");
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) index_[nodes_[i]] = i;
  for (auto& e : edges_) {
    e = normalized(e);
    if (!index_.count(e.u) || !index_.count(e.v))
      throw std::invalid_argument("edge endpoint is not a declared node");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.pu, a.v, a.pv) < std::tie(b.u, b.pu, b.v, b.pv);
  });
  build_tables();
}

void PortGraph::build_tables() {
  degree_.assign(nodes_.size(), 0);
  port_table_.assign(nodes_.size(), {});
  for (const auto& e : edges_) {
    degree_[index_.at(e.u)] += 1;
    degree_[index_.at(e.v)] += 1;
  }
  auto place = [this](NodeId v, int p, EdgeId id, bool u_side) {
    if (p < 1) return;  // validate() reports it
    auto& row = port_table_[index_.at(v)];
    if (static_cast<int>(row.size()) < p) row.resize(p);
    if (row[p - 1].edge < 0) row[p - 1] = {id, u_side};
  };
  for (EdgeId id = 0; id < static_cast<int>(edges_.size()); ++id) {
    const Edge& e = edges_[id];
    place(e.u, e.pu, id, true);
    place(e.v, e.pv, id, false);
  }
}

bool PortGraph::has_node(NodeId v) const { return index_.count(v) != 0; }

int PortGraph::index_of(NodeId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw std::invalid_argument("unknown node id " + std::to_string(v));
  return it->second;
}

int PortGraph::degree(NodeId v) const { return degree_[index_of(v)]; }

int PortGraph::max_degree() const {
  int m = 0;
  for (int d : degree_) m = std::max(m, d);
  return m;
}

int PortGraph::loop_count() const {
  int c = 0;
  for (const auto& e : edges_) c += e.loop();
  return c;
}

const PortGraph::PortRef* PortGraph::port(NodeId v, int p) const {
  const auto& row = port_table_[index_of(v)];
  if (p < 1 || p > static_cast<int>(row.size())) return nullptr;
  const PortRef& r = row[p - 1];
  return r.edge < 0 ? nullptr : &r;
}

bool PortGraph::port_outgoing(NodeId v, int p) const {
  const PortRef* r = port(v, p);
  if (!r) throw std::invalid_argument("unused port");
  const Edge& e = edges_[r->edge];
  return r->u_side ? e.dir == Dir::uv : e.dir == Dir::vu;
}

NodeId PortGraph::neighbor_via(NodeId v, int p) const {
  const PortRef* r = port(v, p);
  if (!r) throw std::invalid_argument("unused port");
  const Edge& e = edges_[r->edge];
  return r->u_side ? e.v : e.u;
}

int PortGraph::far_port(NodeId v, int p) const {
  const PortRef* r = port(v, p);
  if (!r) throw std::invalid_argument("unused port");
  const Edge& e = edges_[r->edge];
  return r->u_side ? e.pv : e.pu;
}

ValidationReport validate(const PortGraph& g) {
  ValidationReport rep;
  auto issue = [&rep](std::string s) {
    rep.ok = false;
    rep.issues.push_back(std::move(s));
  };
  // Collect the ports each edge endpoint claims, one pass over the edges.
  std::vector<std::vector<int>> claimed_at(g.node_count());
  std::vector<std::vector<int>> reused_loop_port(g.node_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges()[id];
    claimed_at[g.index_of(e.u)].push_back(e.pu);
    claimed_at[g.index_of(e.v)].push_back(e.pv);
    if (e.loop() && e.pu == e.pv) reused_loop_port[g.index_of(e.u)].push_back(e.pu);
  }
  for (int i = 0; i < g.node_count(); ++i) {
    NodeId v = g.node_at(i);
    for (int p : reused_loop_port[i])
      issue("node " + std::to_string(v) + ": loop uses the same port twice (port " +
            std::to_string(p) + ")");
    std::vector<int>& claimed = claimed_at[i];
    int deg = static_cast<int>(claimed.size());
    std::sort(claimed.begin(), claimed.end());
    for (int p : claimed)
      if (p < 1 || p > deg)
        issue("node " + std::to_string(v) + ": port " + std::to_string(p) +
              " outside 1.." + std::to_string(deg));
    for (std::size_t i = 1; i < claimed.size(); ++i)
      if (claimed[i] == claimed[i - 1])
        issue("node " + std::to_string(v) + ": duplicate port " + std::to_string(claimed[i]));
    for (int p = 1; p <= deg; ++p)
      if (!std::binary_search(claimed.begin(), claimed.end(), p))
        issue("node " + std::to_string(v) + ": missing port " + std::to_string(p) +
              " (degree " + std::to_string(deg) + ")");
  }
  return rep;
}

void require_valid(const PortGraph& g, const char* context) {
  auto rep = validate(g);
  if (!rep.ok)
    throw std::invalid_argument(std::string(context) + ": invalid graph: " + rep.issues.front());
}

bool has_loops(const PortGraph& g) {
  for (const auto& e : g.edges())
    if (e.loop()) return true;
  return false;
}

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

}  // namespace

bool is_forest_ignoring_loops(const PortGraph& g) {
  Dsu dsu(g.node_count());
  for (const auto& e : g.edges()) {
    if (e.loop()) continue;
    if (!dsu.unite(g.index_of(e.u), g.index_of(e.v))) return false;
  }
  return true;
}

bool is_connected(const PortGraph& g) {
  if (g.node_count() <= 1) return true;
  std::vector<char> seen(g.node_count(), 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int i = q.front();
    q.pop_front();
    NodeId v = g.node_at(i);
    for (int p = 1; p <= g.degree(v); ++p) {
      if (!g.port(v, p)) continue;
      int j = g.index_of(g.neighbor_via(v, p));
      if (!seen[j]) {
        seen[j] = 1;
        ++reached;
        q.push_back(j);
      }
    }
  }
  return reached == g.node_count();
}

std::optional<std::vector<int>> two_color(const PortGraph& g) {
  if (has_loops(g)) return std::nullopt;
  std::vector<int> color(g.node_count(), -1);
  for (int s = 0; s < g.node_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      NodeId v = g.node_at(i);
      for (int p = 1; p <= g.degree(v); ++p) {
        if (!g.port(v, p)) continue;
        int j = g.index_of(g.neighbor_via(v, p));
        if (color[j] < 0) {
          color[j] = 1 - color[i];
          q.push_back(j);
        } else if (color[j] == color[i]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::pair<PortGraph, SubgraphMap> subgraph(const PortGraph& g, const std::vector<EdgeId>& keep) {
  std::set<EdgeId> kept;
  for (EdgeId id : keep) {
    if (id < 0 || id >= g.edge_count())
      throw std::invalid_argument("subgraph: unknown edge id " + std::to_string(id));
    kept.insert(id);
  }
  SubgraphMap sm;
  for (NodeId v : g.nodes()) sm.node_map[v] = v;
  // New port numbers: kept old ports at each node, in increasing order.
  for (NodeId v : g.nodes()) {
    std::vector<int> old_ports;
    for (EdgeId id : kept) {
      const Edge& e = g.edges()[id];
      if (e.u == v) old_ports.push_back(e.pu);
      if (e.v == v) old_ports.push_back(e.pv);
    }
    std::sort(old_ports.begin(), old_ports.end());
    auto& pm = sm.ports[v];
    for (std::size_t i = 0; i < old_ports.size(); ++i) pm[old_ports[i]] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> new_edges;
  std::vector<std::pair<EdgeId, Edge>> tagged;
  for (EdgeId id : kept) {
    Edge e = g.edges()[id];
    e.pu = sm.ports[e.u][e.pu];
    e.pv = sm.ports[e.v][e.pv];
    tagged.emplace_back(id, e);
    new_edges.push_back(e);
  }
  PortGraph out(g.nodes(), new_edges);
  // Recover where each old edge landed after canonical sorting.
  for (auto& [old_id, e] : tagged) {
    auto& es = out.edges();
    auto it = std::find(es.begin(), es.end(), e);
    sm.edge_map[old_id] = static_cast<EdgeId>(it - es.begin());
  }
  return {std::move(out), std::move(sm)};
}

CoverResult double_cover(const PortGraph& g) {
  if (has_loops(g)) throw std::invalid_argument("double_cover: loops not supported");
  CoverResult out;
  std::vector<NodeId> nodes;
  for (int i = 0; i < g.node_count(); ++i) {
    NodeId v = g.node_at(i);
    out.node_map[v] = {2 * i, 2 * i + 1};
    nodes.push_back(2 * i);
    nodes.push_back(2 * i + 1);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    auto [u1, u2] = out.node_map.at(e.u);
    auto [v1, v2] = out.node_map.at(e.v);
    edges.push_back({u1, e.pu, v2, e.pv, e.dir});
    edges.push_back({u2, e.pu, v1, e.pv, e.dir});
  }
  out.graph = PortGraph(std::move(nodes), std::move(edges));
  out.colors.resize(out.graph.node_count());
  for (int i = 0; i < out.graph.node_count(); ++i)
    out.colors[i] = out.graph.node_at(i) % 2;  // white copies got even ids
  return out;
}

UnfoldResult unfold_loops(const PortGraph& g, int depth, NodeId anchor, std::size_t max_nodes) {
  require_valid(g, "unfold_loops");
  if (!g.has_node(anchor)) throw std::invalid_argument("unfold_loops: unknown anchor");
  if (!is_connected(g)) throw std::invalid_argument("unfold_loops: graph must be connected");
  if (depth < 0) throw std::invalid_argument("unfold_loops: negative depth");

  struct Item {
    NodeId orig;
    int parent_port;  // port at this lift toward its parent; 0 for the root
    int dist;
  };
  std::vector<Item> lifts{{anchor, 0, 0}};
  std::vector<Edge> edges;
  std::deque<int> q{0};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    Item it = lifts[x];
    if (it.dist == depth) continue;
    for (int p = 1; p <= g.degree(it.orig); ++p) {
      if (p == it.parent_port) continue;
      NodeId w = g.neighbor_via(it.orig, p);
      int q_far = g.far_port(it.orig, p);
      int child = static_cast<int>(lifts.size());
      if (lifts.size() >= max_nodes) throw std::length_error("unfold_loops: tree exceeds node budget");
      bool child_is_leaf = it.dist + 1 == depth && g.degree(w) > 1;
      int child_port = child_is_leaf ? 1 : q_far;
      lifts.push_back({w, child_port, it.dist + 1});
      if (g.port_outgoing(it.orig, p))
        edges.push_back({x, p, child, child_port, Dir::uv});
      else
        edges.push_back({x, p, child, child_port, Dir::vu});
      q.push_back(child);
    }
  }
  std::vector<NodeId> nodes(lifts.size());
  std::iota(nodes.begin(), nodes.end(), 0);
  UnfoldResult out;
  out.tree = PortGraph(std::move(nodes), std::move(edges));
  out.root = 0;
  out.preimage.resize(lifts.size());
  for (std::size_t i = 0; i < lifts.size(); ++i) out.preimage[i] = lifts[i].orig;
  return out;
}

namespace {

void encode_rec(const PortGraph& t, NodeId v, int parent_port, std::string& out) {
  out += '[';
  for (int p = 1; p <= t.degree(v); ++p) {
    out += std::to_string(p);
    out += t.port_outgoing(v, p) ? '>' : '<';
    out += std::to_string(t.far_port(v, p));
    if (p == parent_port) {
      out += '^';
    } else {
      encode_rec(t, t.neighbor_via(v, p), t.far_port(v, p), out);
    }
    out += ';';
  }
  out += ']';
}

}  // namespace

std::string encode_view(const PortGraph& g, NodeId root, int depth, std::size_t max_nodes) {
  auto un = unfold_loops(g, depth, root, max_nodes);
  std::string out;
  encode_rec(un.tree, un.root, 0, out);
  return out;
}

}  // namespace fracmatch

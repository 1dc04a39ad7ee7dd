#pragma once

// Port-numbered graphs: every node sees its incident edge endpoints through
// consecutive ports 1..deg, and every edge carries an orientation. A loop
// occupies two ports of its node (an outgoing side and an incoming side) and
// counts twice toward its degree. PortGraph values are immutable once built;
// construction canonicalizes edge order so that equal graphs serialize to
// identical bytes and edge ids are stable.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fracmatch {

using NodeId = int;
using EdgeId = int;

enum class Dir { uv, vu };  // uv: oriented from endpoint u toward endpoint v

struct Edge {
  NodeId u = 0;
  int pu = 0;
  NodeId v = 0;
  int pv = 0;
  Dir dir = Dir::uv;

  bool loop() const { return u == v; }
  bool operator==(const Edge&) const = default;
};

class PortGraph {
public:
  PortGraph() = default;
  // Throws std::invalid_argument on duplicate node ids or edges whose
  // endpoints were not declared. Port-level problems (gaps, duplicates) are
  // the domain of validate(), not the constructor.
  PortGraph(std::vector<NodeId> nodes, std::vector<Edge> edges);

  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_node(NodeId v) const;
  int index_of(NodeId v) const;  // dense index in nodes(); throws on unknown id
  NodeId node_at(int idx) const { return nodes_.at(idx); }

  int degree(NodeId v) const;  // loops count twice
  int max_degree() const;
  int loop_count() const;

  struct PortRef {
    EdgeId edge = -1;
    bool u_side = false;
  };
  // Resolved port table entry, or nullptr for an unused port slot. Only
  // meaningful on graphs that pass validate().
  const PortRef* port(NodeId v, int p) const;
  bool port_outgoing(NodeId v, int p) const;
  NodeId neighbor_via(NodeId v, int p) const;
  int far_port(NodeId v, int p) const;

  bool operator==(const PortGraph& o) const {
    return nodes_ == o.nodes_ && edges_ == o.edges_;
  }

private:
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::map<NodeId, int> index_;
  std::vector<int> degree_;                       // by dense index
  std::vector<std::vector<PortRef>> port_table_;  // by dense index; slot p-1 = port p
  void build_tables();
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> issues;
};

ValidationReport validate(const PortGraph& g);

// Convenience: throws std::invalid_argument with the first issues if invalid.
void require_valid(const PortGraph& g, const char* context);

bool has_loops(const PortGraph& g);
bool is_forest_ignoring_loops(const PortGraph& g);
bool is_connected(const PortGraph& g);

// Deterministic proper 2-coloring (by dense index), or nullopt if none exists.
std::optional<std::vector<int>> two_color(const PortGraph& g);

struct SubgraphMap {
  std::map<NodeId, NodeId> node_map;            // injective; identity here
  std::map<NodeId, std::map<int, int>> ports;   // per node: old port -> new port
  std::map<EdgeId, EdgeId> edge_map;            // old edge id -> new edge id
};

// Keep exactly the given edges (all nodes are retained). Ports at each node
// are renumbered 1..new-degree preserving their relative order. Throws on
// unknown edge ids.
std::pair<PortGraph, SubgraphMap> subgraph(const PortGraph& g, const std::vector<EdgeId>& keep);

struct CoverResult {
  PortGraph graph;
  std::map<NodeId, std::pair<NodeId, NodeId>> node_map;  // v -> (white copy, black copy)
  std::vector<int> colors;                               // by dense index of cover graph
};

// Bipartite double cover: nodes (v,1),(v,2); each edge {u,v} lifts to
// {u1,v2} and {u2,v1} with the original ports and orientation on both lifts.
// Throws std::invalid_argument if g has loops.
CoverResult double_cover(const PortGraph& g);

struct UnfoldResult {
  PortGraph tree;
  NodeId root = 0;
  std::vector<NodeId> preimage;  // by dense index of tree: originating node
};

// Truncated universal cover: unrolls loops (and cycles) into a tree of the
// given radius around a lift of `anchor`. Within radius depth-1 every node
// keeps the exact degree and port/orientation profile of its preimage;
// boundary leaves keep only the edge toward their parent, renumbered to
// port 1. Requires a connected graph. Throws std::length_error if the tree
// would exceed max_nodes.
UnfoldResult unfold_loops(const PortGraph& g, int depth, NodeId anchor,
                          std::size_t max_nodes = 2'000'000);

// Canonical string for the radius-`depth` truncated unfolding around `root`;
// two (graph, root) pairs have isomorphic views iff the strings are equal.
std::string encode_view(const PortGraph& g, NodeId root, int depth,
                        std::size_t max_nodes = 2'000'000);

}  // namespace fracmatch

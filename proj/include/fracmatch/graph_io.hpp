#pragma once

// Text formats. Graphs:
//
//   # comment
//   node <id>
//   edge <u> <pu> <v> <pv> <uv|vu>
//   loop <v> <p_out> <p_in>
//
// Edge assignments (edge ids refer to the canonical order emitted by
// write_graph for the same graph):
//
//   x <edge-id> <p/q>
//
// '#' starts a comment anywhere; blank lines are ignored. Writers emit
// canonical bytes: write(parse(write(g))) == write(g).

#include "fracmatch/graph.hpp"
#include "fracmatch/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fracmatch {

using EdgeAssignment = std::vector<Rat>;  // dense, indexed by edge id

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PortGraph parse_graph(std::istream& in);
PortGraph parse_graph_text(const std::string& text);
PortGraph load_graph(const std::string& path);

std::string write_graph(const PortGraph& g);
void save_graph(const PortGraph& g, const std::string& path);

EdgeAssignment parse_assignment(std::istream& in, const PortGraph& g);
EdgeAssignment load_assignment(const std::string& path, const PortGraph& g);

std::string write_assignment(const PortGraph& g, const EdgeAssignment& x);
void save_assignment(const PortGraph& g, const EdgeAssignment& x, const std::string& path);

// Graphviz digraph; edge arrows follow orientations, tail/head labels show
// the port numbers.
std::string write_dot(const PortGraph& g, const std::optional<EdgeAssignment>& x = std::nullopt);

}  // namespace fracmatch

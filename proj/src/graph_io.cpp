#include "fracmatch/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fracmatch {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  return toks;
}

int parse_int(const std::string& tok, int lineno, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(lineno) + ": bad " + what + " '" + tok + "'");
  }
}

}  // namespace

PortGraph parse_graph(std::istream& in) {
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "node") {
      if (toks.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": node takes 1 field");
      NodeId v = parse_int(toks[1], lineno, "node id");
      if (std::find(nodes.begin(), nodes.end(), v) != nodes.end())
        throw ParseError("line " + std::to_string(lineno) + ": node " + toks[1] + " declared twice");
      nodes.push_back(v);
    } else if (kw == "edge") {
      if (toks.size() != 6) throw ParseError("line " + std::to_string(lineno) + ": edge takes 5 fields");
      Edge e;
      e.u = parse_int(toks[1], lineno, "node id");
      e.pu = parse_int(toks[2], lineno, "port");
      e.v = parse_int(toks[3], lineno, "node id");
      e.pv = parse_int(toks[4], lineno, "port");
      if (toks[5] == "uv")
        e.dir = Dir::uv;
      else if (toks[5] == "vu")
        e.dir = Dir::vu;
      else
        throw ParseError("line " + std::to_string(lineno) + ": orientation must be uv or vu");
      if (e.u == e.v)
        throw ParseError("line " + std::to_string(lineno) + ": same endpoints; use a loop line");
      edges.push_back(e);
    } else if (kw == "loop") {
      if (toks.size() != 4) throw ParseError("line " + std::to_string(lineno) + ": loop takes 3 fields");
      Edge e;
      e.u = e.v = parse_int(toks[1], lineno, "node id");
      e.pu = parse_int(toks[2], lineno, "port");
      e.pv = parse_int(toks[3], lineno, "port");
      e.dir = Dir::uv;
      edges.push_back(e);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
    }
  }
  try {
    return PortGraph(std::move(nodes), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

PortGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

PortGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

std::string write_graph(const PortGraph& g) {
  std::string out;
  for (NodeId v : g.nodes()) out += "node " + std::to_string(v) + "\n";
  for (const Edge& e : g.edges()) {
    if (e.loop()) {
      out += "loop " + std::to_string(e.u) + " " + std::to_string(e.pu) + " " +
             std::to_string(e.pv) + "\n";
    } else {
      out += "edge " + std::to_string(e.u) + " " + std::to_string(e.pu) + " " +
             std::to_string(e.v) + " " + std::to_string(e.pv) + " " +
             (e.dir == Dir::uv ? "uv" : "vu") + "\n";
    }
  }
  return out;
}

void save_graph(const PortGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write graph file '" + path + "'");
  out << write_graph(g);
}

EdgeAssignment parse_assignment(std::istream& in, const PortGraph& g) {
  EdgeAssignment x(g.edge_count());
  std::vector<char> seen(g.edge_count(), 0);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] != "x" || toks.size() != 3)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'x <edge-id> <p/q>'");
    int id = parse_int(toks[1], lineno, "edge id");
    if (id < 0 || id >= g.edge_count())
      throw ParseError("line " + std::to_string(lineno) + ": edge id " + toks[1] +
                       " out of range (graph has " + std::to_string(g.edge_count()) + " edges)");
    if (seen[id])
      throw ParseError("line " + std::to_string(lineno) + ": edge " + toks[1] + " assigned twice");
    auto r = Rat::parse(toks[2]);
    if (!r) throw ParseError("line " + std::to_string(lineno) + ": bad value '" + toks[2] + "'");
    x[id] = *r;
    seen[id] = 1;
  }
  for (int id = 0; id < g.edge_count(); ++id)
    if (!seen[id]) throw ParseError("assignment misses edge " + std::to_string(id));
  return x;
}

EdgeAssignment load_assignment(const std::string& path, const PortGraph& g) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open assignment file '" + path + "'");
  return parse_assignment(in, g);
}

std::string write_assignment(const PortGraph& g, const EdgeAssignment& x) {
  std::string out;
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges()[id];
    out += "# edge " + std::to_string(id) + ": " + std::to_string(e.u) + "(" +
           std::to_string(e.pu) + ")" + (e.loop() ? " self " : " -- ") + std::to_string(e.v) +
           "(" + std::to_string(e.pv) + ")\n";
    out += "x " + std::to_string(id) + " " + x.at(id).str() + "\n";
  }
  return out;
}

void save_assignment(const PortGraph& g, const EdgeAssignment& x, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write assignment file '" + path + "'");
  out << write_assignment(g, x);
}

std::string write_dot(const PortGraph& g, const std::optional<EdgeAssignment>& x) {
  if (x && x->size() != static_cast<std::size_t>(g.edge_count()))
    throw std::invalid_argument("write_dot: assignment size mismatch");
  std::string out = "digraph ports {\n";
  for (NodeId v : g.nodes()) out += "  n" + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"];\n";
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges()[id];
    NodeId from = e.dir == Dir::uv ? e.u : e.v;
    NodeId to = e.dir == Dir::uv ? e.v : e.u;
    int pf = e.dir == Dir::uv ? e.pu : e.pv;
    int pt = e.dir == Dir::uv ? e.pv : e.pu;
    out += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + " [taillabel=\"" +
           std::to_string(pf) + "\", headlabel=\"" + std::to_string(pt) + "\"";
    if (x) out += ", label=\"" + (*x)[id].str() + "\"";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace fracmatch

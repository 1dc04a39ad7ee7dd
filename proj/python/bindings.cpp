// Python face of the library.  Exact values cross the boundary as "p/q"
// strings (lossless, and fractions.Fraction accepts them directly); the
// larger reports cross as JSON strings that the package wrapper parses.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fracmatch/algorithms.hpp"
#include "fracmatch/gen.hpp"
#include "fracmatch/graph.hpp"
#include "fracmatch/graph_io.hpp"
#include "fracmatch/lower_bound.hpp"
#include "fracmatch/oracle.hpp"
#include "fracmatch/rational.hpp"
#include "fracmatch/sim.hpp"
#include "fracmatch/verify.hpp"

namespace py = pybind11;
using namespace fracmatch;

namespace {

Dir parse_dir(const std::string& s) {
  if (s == "uv") return Dir::uv;
  if (s == "vu") return Dir::vu;
  throw std::invalid_argument("edge direction must be 'uv' or 'vu', got '" + s + "'");
}

using EdgeTuple = std::tuple<int, int, int, int, std::string>;

PortGraph graph_from_lists(const std::vector<NodeId>& nodes,
                           const std::vector<EdgeTuple>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [u, pu, v, pv, dir] : edges)
    es.push_back({u, pu, v, pv, parse_dir(dir)});
  return PortGraph(nodes, es);
}

std::vector<EdgeTuple> edges_as_tuples(const PortGraph& g) {
  std::vector<EdgeTuple> out;
  out.reserve(g.edges().size());
  for (const Edge& e : g.edges())
    out.emplace_back(e.u, e.pu, e.v, e.pv, e.dir == Dir::uv ? "uv" : "vu");
  return out;
}

EdgeAssignment assignment_from_strings(const PortGraph& g,
                                       const std::vector<std::string>& values) {
  if (static_cast<int>(values.size()) != g.edge_count())
    throw std::invalid_argument("assignment has " + std::to_string(values.size()) +
                                " values for " + std::to_string(g.edge_count()) + " edges");
  EdgeAssignment x;
  x.reserve(values.size());
  for (const std::string& s : values) x.push_back(Rat::from_string(s));
  return x;
}

std::vector<std::string> assignment_to_strings(const EdgeAssignment& x) {
  std::vector<std::string> out;
  out.reserve(x.size());
  for (const Rat& v : x) out.push_back(v.str());
  return out;
}

RunOptions options_from_args(std::optional<std::map<NodeId, int>> colors, int max_rounds) {
  RunOptions opts;
  opts.max_rounds = max_rounds;
  opts.colors = std::move(colors);
  return opts;
}

py::dict result_to_dict(const PortGraph& g, const RunResult& r) {
  py::dict d;
  d["assignment"] = assignment_to_strings(r.assignment);
  d["rounds"] = r.rounds;
  d["messages"] = r.messages;
  py::dict halts;
  for (int i = 0; i < g.node_count(); ++i)
    halts[py::int_(g.node_at(i))] = r.halt_rounds[i];
  d["halt_rounds"] = halts;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Round-synchronous simulator and maximal fractional matching toolkit";

  py::register_exception<SimFaultError>(m, "SimFault", PyExc_RuntimeError);
  py::register_exception<SimBudgetError>(m, "SimBudget", PyExc_RuntimeError);
  py::register_exception<TheoryViolationError>(m, "TheoryViolation", PyExc_RuntimeError);

  py::class_<PortGraph>(m, "PortGraph")
      .def(py::init(&graph_from_lists), py::arg("nodes"), py::arg("edges"),
           "Build from a node list and (u, pu, v, pv, dir) edge tuples.")
      .def("nodes", [](const PortGraph& g) { return g.nodes(); })
      .def("edges", &edges_as_tuples)
      .def("node_count", &PortGraph::node_count)
      .def("edge_count", &PortGraph::edge_count)
      .def("degree", &PortGraph::degree, py::arg("v"))
      .def("max_degree", &PortGraph::max_degree)
      .def("loop_count", &PortGraph::loop_count)
      .def("__eq__", [](const PortGraph& a, const PortGraph& b) { return a == b; })
      .def("__repr__", [](const PortGraph& g) {
        std::ostringstream os;
        os << "PortGraph(" << g.node_count() << " nodes, " << g.edge_count() << " edges)";
        return os.str();
      });

  // io
  m.def("parse_graph", &parse_graph_text, py::arg("text"));
  m.def("write_graph", &write_graph, py::arg("graph"));
  m.def("write_dot", [](const PortGraph& g, std::optional<std::vector<std::string>> values) {
    if (!values) return write_dot(g);
    return write_dot(g, assignment_from_strings(g, *values));
  }, py::arg("graph"), py::arg("assignment") = std::nullopt);
  m.def("write_assignment", [](const PortGraph& g, const std::vector<std::string>& values) {
    return write_assignment(g, assignment_from_strings(g, values));
  }, py::arg("graph"), py::arg("assignment"));

  // generators
  m.def("gen_path", &gen_path, py::arg("n"), py::arg("seed"));
  m.def("gen_cycle", &gen_cycle, py::arg("n"), py::arg("seed"));
  m.def("gen_random", &gen_random, py::arg("n"), py::arg("delta"), py::arg("seed"),
        py::arg("m_target") = std::nullopt);
  m.def("make_G0", &make_G0, py::arg("d"), "One node with d self-loops.");

  // structure
  m.def("validate", [](const PortGraph& g) {
    ValidationReport rep = validate(g);
    py::dict d;
    d["ok"] = rep.ok;
    d["issues"] = rep.issues;
    return d;
  }, py::arg("graph"));
  m.def("has_loops", &has_loops, py::arg("graph"));
  m.def("two_color", [](const PortGraph& g) -> std::optional<std::map<NodeId, int>> {
    auto c = two_color(g);
    if (!c) return std::nullopt;
    std::map<NodeId, int> out;
    for (int i = 0; i < g.node_count(); ++i) out[g.node_at(i)] = (*c)[i];
    return out;
  }, py::arg("graph"));
  m.def("encode_view", &encode_view, py::arg("graph"), py::arg("root"), py::arg("depth"),
        py::arg("max_nodes") = std::size_t{2'000'000});
  m.def("unfold_loops", [](const PortGraph& g, int depth, NodeId anchor) {
    auto un = unfold_loops(g, depth, anchor);
    return py::make_tuple(un.tree, un.root, un.preimage);
  }, py::arg("graph"), py::arg("depth"), py::arg("anchor"),
     "Returns (tree, root, preimage by dense tree index).");

  // running algorithms
  m.def("mfm_rounds", &mfm_rounds, py::arg("delta"));
  m.def("algorithm_rounds", [](const std::string& name, int delta) {
    return make_algorithm(name, delta)->round_budget();
  }, py::arg("name"), py::arg("delta"));
  m.def("run", [](const PortGraph& g, const std::string& algorithm, int delta,
                  const std::string& model, std::optional<std::map<NodeId, int>> colors,
                  int max_rounds) {
    auto alg = make_algorithm(algorithm, delta);
    RunResult r = run(g, *alg, parse_model(model), options_from_args(std::move(colors), max_rounds));
    return result_to_dict(g, r);
  }, py::arg("graph"), py::arg("algorithm"), py::arg("delta"), py::arg("model") = "pn",
     py::arg("colors") = std::nullopt, py::arg("max_rounds") = 1'000'000);
  m.def("run_loopy", [](const PortGraph& g, const std::string& algorithm, int delta,
                        const std::string& model, std::optional<std::map<NodeId, int>> colors,
                        int max_rounds) {
    auto alg = make_algorithm(algorithm, delta);
    RunResult r = run_loopy(g, *alg, parse_model(model),
                            options_from_args(std::move(colors), max_rounds));
    return result_to_dict(g, r);
  }, py::arg("graph"), py::arg("algorithm"), py::arg("delta"), py::arg("model") = "pn",
     py::arg("colors") = std::nullopt, py::arg("max_rounds") = 1'000'000);

  // checking
  m.def("verify_json", [](const PortGraph& g, const std::vector<std::string>& values,
                          std::optional<std::string> value_set) {
    std::optional<ValueSet> vs;
    if (value_set) {
      vs = ValueSet::parse(*value_set);
      if (!vs) throw std::invalid_argument("bad value set '" + *value_set + "'");
    }
    return verify_report_json(verify(g, assignment_from_strings(g, values), vs));
  }, py::arg("graph"), py::arg("assignment"), py::arg("value_set") = std::nullopt);
  m.def("node_load", [](const PortGraph& g, const std::vector<std::string>& values, NodeId v) {
    return node_load(g, assignment_from_strings(g, values), v).str();
  }, py::arg("graph"), py::arg("assignment"), py::arg("node"));
  m.def("check_almost_saturating", [](const PortGraph& g, const std::vector<std::string>& values) {
    return check_almost_saturating(g, assignment_from_strings(g, values)).ok;
  }, py::arg("graph"), py::arg("assignment"));

  // exact values
  m.def("class_index", [](const std::string& value) {
    return class_index(Rat::from_string(value));
  }, py::arg("value"), "Exponent of the denominator's power-of-two part.");

  // oracles
  m.def("exhaustive_mfm_search", [](const PortGraph& g, int d) {
    std::vector<std::vector<std::string>> out;
    for (const EdgeAssignment& x : exhaustive_mfm_search(g, dyadic_values(d)))
      out.push_back(assignment_to_strings(x));
    return out;
  }, py::arg("graph"), py::arg("d"),
     "Every maximal fractional matching over the grid {i/2^d}.");
  m.def("obs32_witness_search", [](int n, const std::string& target, int r, int rp,
                                   int max_denom) {
    Obs32Report rep = obs32_witness_search(n, Rat::from_string(target), r, rp, max_denom);
    py::dict d;
    d["holds"] = rep.holds;
    d["grid_size"] = rep.grid_size;
    d["tuples_examined"] = rep.tuples_examined;
    if (rep.counterexample_ells) {
      std::vector<std::string> ells;
      for (const Rat& v : *rep.counterexample_ells) ells.push_back(v.str());
      d["counterexample"] = ells;
    } else {
      d["counterexample"] = py::none();
    }
    return d;
  }, py::arg("n"), py::arg("target"), py::arg("r"), py::arg("rp"), py::arg("max_denom") = 24);

  // lower-bound chain
  m.def("lb_harness_json", [](const std::string& algorithm, int delta, const std::string& model,
                              int d, std::optional<int> T_override) {
    auto alg = make_algorithm(algorithm, delta);
    return lb_report_json(lb_harness(*alg, parse_model(model), d, T_override));
  }, py::arg("algorithm"), py::arg("delta"), py::arg("model"), py::arg("d"),
     py::arg("T_override") = std::nullopt);
}

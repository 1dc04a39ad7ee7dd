#pragma once

// The bundled node-local algorithms. All of them are PN algorithms (port
// numbers suffice); the proposal matcher additionally needs a proper
// 2-coloring supplied as input. Every algorithm runs a fixed schedule: all
// nodes of positive degree halt at exactly the round reported by
// round_budget(), which keeps compositions synchronous and makes measured
// round counts independent of the input graph.
//
//   base2           1 round        maximal fractional matching for degree <= 2
//   proposal-mm     2*delta rounds maximal matching on 2-colored graphs
//   almost-sat      2*delta+1      half-integral almost-saturating solution
//                                  (delta = 2d+2), via an internally
//                                  simulated bipartite double cover
//   mfm             see below      maximal fractional matching for any delta,
//                                  values on the grid {i/2^floor(delta/2)}
//
// mfm(delta) recurses: delta <= 2 is base2; odd delta = 2d+1 classifies edges
// by port-pair labels, solves the Mid subgraph with mfm(2d) in a reserved
// window of 5*(2d)^3 rounds, then processes the labels in a canonical order
// giving every End edge min{1 - x[u], 1 - x[v]}; even delta = 2d+2 runs
// almost-sat, then mfm(2d+1) on the half-saturated subgraph in a window of
// 5*(2d+1)^3 rounds, and combines x = xbar + x'/2.

#include "fracmatch/sim.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace fracmatch {

std::unique_ptr<AlgorithmSpec> base_case();
std::unique_ptr<AlgorithmSpec> bipartite_proposal_mm(int delta);
std::unique_ptr<AlgorithmSpec> almost_saturating(int d);  // for graphs of max degree 2d+2
std::unique_ptr<AlgorithmSpec> mfm(int delta);

// Exact halting round of mfm(delta) for every node of positive degree.
int mfm_rounds(int delta);

// CLI registry. Names: "mfm", "base2", "almost-sat", "proposal-mm"; delta is
// the globally known degree bound (base2 ignores it).
std::unique_ptr<AlgorithmSpec> make_algorithm(const std::string& name, int delta);

// Structural helpers mirroring what the odd step computes from messages, for
// whole-graph inspection in tests: the {port,port} label of each edge as an
// ordered (min,max) pair, and the Mid classification (an edge is Mid when
// both endpoints have exactly two incident edges carrying its label).
std::vector<std::pair<int, int>> edge_labels(const PortGraph& g);
std::vector<bool> edge_is_mid(const PortGraph& g);

}  // namespace fracmatch

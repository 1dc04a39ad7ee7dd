#pragma once

// Exact checking of fractional matchings. A node's load is the sum of the
// values on its incident edge endpoints, so a loop contributes its value
// twice. Feasibility: every load <= 1. Maximality: every edge has a
// saturated endpoint (for a loop that endpoint is its own node).

#include "fracmatch/graph.hpp"
#include "fracmatch/graph_io.hpp"
#include "fracmatch/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fracmatch {

Rat node_load(const PortGraph& g, const EdgeAssignment& x, NodeId v);

struct VerifyReport {
  bool feasible = true;
  bool maximal = true;
  bool values_ok = true;  // stays true when no value set was requested
  std::vector<NodeId> saturated;

  struct LoadIssue {
    NodeId node;
    Rat load;
  };
  std::vector<LoadIssue> overloaded;  // witnesses for feasibility violations

  struct EdgeIssue {
    EdgeId edge;
    Rat load_u, load_v;
  };
  std::vector<EdgeIssue> unsaturated_edges;  // witnesses for maximality violations

  struct EdgeVerdict {
    EdgeId edge;
    Rat value;
    int cls;             // denominator class of the value
    bool in_set = true;  // meaningful when a value set was requested
  };
  std::vector<EdgeVerdict> edges;
  std::optional<ValueSet> value_set;

  bool ok() const { return feasible && maximal && values_ok; }
};

VerifyReport verify(const PortGraph& g, const EdgeAssignment& x,
                    std::optional<ValueSet> value_set = std::nullopt);

// JSON rendering with stable key order.
std::string verify_report_json(const VerifyReport& rep);

// Almost-saturating property of a half-integral assignment: a load-0 node
// has only saturated neighbors, and a load-1/2 node has at least one.
// Throws std::invalid_argument if x is not half-integral.
struct AlmostSatReport {
  bool ok = true;
  struct Violation {
    NodeId node;
    int clause;  // 1: load-0 clause, 2: load-1/2 clause
    Rat load;
  };
  std::vector<Violation> violations;
};

AlmostSatReport check_almost_saturating(const PortGraph& g, const EdgeAssignment& x);

// Partition of the edges of a half-integral assignment by endpoint loads:
// half-saturated (both loads exactly 1/2), fully-saturated (some load 1),
// other (anything else; empty whenever x is almost-saturating).
struct SaturationClasses {
  std::vector<EdgeId> half;
  std::vector<EdgeId> full;
  std::vector<EdgeId> other;
};

SaturationClasses classify_saturation(const PortGraph& g, const EdgeAssignment& x);

}  // namespace fracmatch

#pragma once

// Executable denominator-growth chain. Starting from a single node with d
// loops, repeatedly: run the algorithm, verify its output, walk the tree
// from the marked node following edges of non-decreasing class until a loop
// of strictly larger class appears, then rebuild — remove that loop, lay
// 2T+3 copies in a directed chain whose path edges reuse the freed port
// slots, and mark the middle copy. The marked node's radius-T view is
// unchanged by the rebuild, so a deterministic algorithm commits to the same
// local outputs while the arithmetic forces the even part of some
// denominator to grow by at least one factor of two per level.

#include "fracmatch/graph.hpp"
#include "fracmatch/graph_io.hpp"
#include "fracmatch/rational.hpp"
#include "fracmatch/sim.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracmatch {

// Thrown when the structure of a verified output contradicts the parity
// argument (no loop of large enough class exists anywhere). Reaching this
// means a bug in the arithmetic, the verifier or the walk — never expected.
class TheoryViolationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// One node, d loops on ports (1,2), (3,4), ..., degree 2d.
PortGraph make_G0(int d);

struct FineLoop {
  NodeId node = -1;
  EdgeId loop = -1;
  int cls = 0;                // class of x[loop]; > threshold
  bool used_fallback = false; // walk stalled, global scan recovered
  std::string note;           // discrepancy description when used_fallback
};

// Walk g's tree part from root: maintain the class n of the last traversed
// edge (initially threshold); at each node return the lowest-id loop of
// class > n if one exists, else traverse the lowest-id non-loop edge of
// class >= n pointing away from root. x must be a feasible maximal solution
// and every node must carry a loop. Falls back to a global loop scan (with a
// note) if the walk stalls; throws TheoryViolationError if no qualifying
// loop exists at all.
FineLoop find_fine_loop(const PortGraph& g, const EdgeAssignment& x, NodeId root, int threshold);

struct BuildNextResult {
  PortGraph graph;
  NodeId root;
};

// The rebuild step: drop loop_id (a loop at v_prev), make 2T+3 copies,
// connect consecutive copies' v_prev by a directed path edge that occupies
// the dropped loop's out-slot at the tail and in-slot at the head, compact
// the single unused slot at each chain end, and mark copy T+2's v_prev.
BuildNextResult build_next(const PortGraph& g_prev, NodeId v_prev, EdgeId loop_id, int T);

struct LBLevel {
  int index = 0;
  PortGraph graph;
  NodeId root = -1;
  int nodes = 0;
  int edges = 0;
  int loops = 0;
  int rounds = 0;        // measured halting round at this level
  bool verify_ok = false;
  NodeId fine_node = -1; // where the traced loop sits
  EdgeId fine_loop = -1;
  Rat loop_value;
  int loop_class = 0;    // > index when the chain behaves
  bool fallback_used = false;
  std::string note;
};

struct LBChainReport {
  int d = 0;
  bool ok = false;
  std::string failure;  // first thing that went wrong, when !ok
  std::vector<LBLevel> levels;
  int max_class = 0;
};

// Levels 0..d-1. T for each rebuild defaults to the previous level's
// measured rounds + 2; T_override forces a specific value (useful for
// keeping test instances tiny). A failed verification or an engine fault is
// reported in the result, not thrown.
LBChainReport lb_harness(const AlgorithmSpec& alg, Model model, int d,
                         std::optional<int> T_override = std::nullopt);

std::string lb_report_json(const LBChainReport& report);

}  // namespace fracmatch

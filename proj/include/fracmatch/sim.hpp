#pragma once

// Round-synchronous execution of node-local algorithms. Every round has three
// phases: all running nodes emit their outboxes (computed from state as of the
// previous round), the engine delivers along every edge, and all running nodes
// consume their inboxes and may halt. A node that halts before round 1 is a
// 0-round node. Determinism is part of the contract: identical graph, options
// and algorithm give bit-identical results.
//
// run() works on loop-free graphs. run_loopy() additionally accepts loops and
// gives them the semantics of the infinite unfolding without materializing
// it: all lifts of a node share one state, so delivering a node's own
// same-phase outgoing-port message to its incoming port (and vice versa) is
// exactly what each lift would receive from its neighbors in the unfolded
// tree. LOCAL is rejected on loopy graphs (unique identifiers have no
// consistent meaning on an infinite unfolding).

#include "fracmatch/graph.hpp"
#include "fracmatch/graph_io.hpp"
#include "fracmatch/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracmatch {

enum class Model { PN, PO, LOCAL };

Model parse_model(std::string_view text);  // "pn" | "po" | "local"; throws std::invalid_argument
std::string model_name(Model m);

using Message = std::string;
// Port -> message. A port with no entry carries nothing that round; receivers
// must tolerate missing ports.
using Inbox = std::map<int, Message>;
using Outbox = std::map<int, Message>;

// What a node is allowed to see at startup. `outgoing` is filled only under
// PO (outgoing[p-1] for port p), `id` only under LOCAL, and `color` only when
// the caller supplied a coloring.
struct NodeView {
  int degree = 0;
  std::vector<bool> outgoing;
  std::optional<std::uint64_t> id;
  std::optional<int> color;
};

class NodeProgram {
public:
  virtual ~NodeProgram() = default;
  // Returns false to halt immediately (before any communication).
  virtual bool init(const NodeView& view) = 0;
  // Messages for the current round; must not depend on this round's inbox.
  virtual Outbox send() = 0;
  // Consumes the current round's inbox; returns false to halt.
  virtual bool receive(const Inbox& inbox) = 0;
  // Value for the edge behind each port; must cover exactly ports 1..degree.
  virtual std::map<int, Rat> output() const = 0;
};

class AlgorithmSpec {
public:
  virtual ~AlgorithmSpec() = default;
  virtual std::string name() const = 0;
  // Worst-case halting round. The bundled algorithms run fixed schedules, so
  // for them this is the exact halting round of every node of degree > 0.
  virtual int round_budget() const = 0;
  virtual std::unique_ptr<NodeProgram> instantiate() const = 0;
};

// A node program misbehaved: message on a nonexistent port, malformed
// message, missing output, endpoint outputs that disagree, or an internal
// invariant check that failed.
struct SimFaultError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Some node was still running after max_rounds rounds.
struct SimBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  int max_rounds = 1'000'000;
  // LOCAL only: identifiers are drawn deterministically from {1,...,n^3}
  // using this seed, unless `ids` supplies the assignment outright.
  std::uint64_t id_seed = 1;
  std::optional<std::map<NodeId, std::uint64_t>> ids;
  // Optional per-node color input (0 = white, 1 = black), exposed through
  // NodeView::color under every model.
  std::optional<std::map<NodeId, int>> colors;
  // When set, one JSON line per (round, node): round, node id, digest of the
  // node's outbox, outbox size, halted flag.
  std::ostream* trace = nullptr;
};

struct RunResult {
  EdgeAssignment assignment;
  int rounds = 0;                // max halting round over all nodes
  std::vector<int> halt_rounds;  // by dense node index
  long long messages = 0;        // messages delivered to running nodes
};

RunResult run(const PortGraph& g, const AlgorithmSpec& alg, Model model,
              const RunOptions& opts = {});
RunResult run_loopy(const PortGraph& g, const AlgorithmSpec& alg, Model model,
                    const RunOptions& opts = {});

}  // namespace fracmatch

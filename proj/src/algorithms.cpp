#include "fracmatch/algorithms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fracmatch {

namespace {

Rat parse_rat_msg(const Message& msg, const char* who) {
  auto r = Rat::parse(msg);
  if (!r) throw SimFaultError(std::string(who) + ": malformed rational message '" + msg + "'");
  return *r;
}

// ---------------------------------------------------------------------------
// base2: one round of degree exchange solves everything up to degree 2.

class Base2Program : public NodeProgram {
public:
  bool init(const NodeView& view) override {
    deg_ = view.degree;
    if (deg_ == 0) return false;
    if (deg_ > 2) throw SimFaultError("base2: node of degree " + std::to_string(deg_) + " (bound is 2)");
    return true;
  }

  Outbox send() override {
    Outbox out;
    for (int p = 1; p <= deg_; ++p) out[p] = std::to_string(deg_);
    return out;
  }

  bool receive(const Inbox& inbox) override {
    for (int p = 1; p <= deg_; ++p) {
      auto it = inbox.find(p);
      if (it == inbox.end()) throw SimFaultError("base2: missing degree message on port " + std::to_string(p));
      int far = it->second == "1" ? 1 : it->second == "2" ? 2 : 0;
      if (far == 0) throw SimFaultError("base2: malformed degree message '" + it->second + "'");
      if (deg_ == 2)
        out_[p] = Rat(1, 2);
      else
        out_[p] = far == 2 ? Rat(1, 2) : Rat(1);
    }
    return false;
  }

  std::map<int, Rat> output() const override { return out_; }

private:
  int deg_ = 0;
  std::map<int, Rat> out_;
};

class Base2Spec : public AlgorithmSpec {
public:
  std::string name() const override { return "base2"; }
  int round_budget() const override { return 1; }
  std::unique_ptr<NodeProgram> instantiate() const override {
    return std::make_unique<Base2Program>();
  }
};

// ---------------------------------------------------------------------------
// One side of the proposal dance. Odd rounds: whites put port 1, then port 2,
// ... on the wire; even rounds: blacks answer every proposal, accepting the
// lowest-numbered of their own ports first and rejecting everything once
// matched. Used directly by proposal-mm and twice per node (one copy white,
// one black) inside the double-cover construction.

class ProposalSide {
public:
  void start(int degree, bool white) {
    deg_ = degree;
    white_ = white;
  }

  std::map<int, char> send(int round) {
    std::map<int, char> out;
    if (white_) {
      // A proposal sent at round 2k-1 is answered in round 2k's inbox, so
      // last_proposal_ must survive the even round's send phase.
      if (round % 2 == 1) {
        last_proposal_ = -1;
        int k = (round + 1) / 2;
        if (matched_ < 0 && k <= deg_) {
          out[k] = 'p';
          last_proposal_ = k;
        }
      }
    } else if (round % 2 == 0) {
      out.swap(pending_answers_);
    }
    return out;
  }

  void receive(int round, const std::map<int, char>& in) {
    if (white_) {
      if (round % 2 == 0 && last_proposal_ > 0) {
        auto it = in.find(last_proposal_);
        if (it == in.end())
          throw SimFaultError("proposal: no answer to the proposal on port " +
                              std::to_string(last_proposal_) + " (is the coloring proper?)");
        if (it->second == 'a')
          matched_ = last_proposal_;
        else if (it->second != 'r')
          throw SimFaultError("proposal: malformed answer");
      }
    } else if (round % 2 == 1 && !in.empty()) {
      int accept = -1;
      if (matched_ < 0) {
        accept = in.begin()->first;  // lowest port; map order
        matched_ = accept;
      }
      for (const auto& [port, c] : in) {
        if (c != 'p') throw SimFaultError("proposal: expected a proposal, got garbage");
        pending_answers_[port] = port == accept ? 'a' : 'r';
      }
    }
  }

  int matched_port() const { return matched_; }

private:
  int deg_ = 0;
  bool white_ = false;
  int matched_ = -1;
  int last_proposal_ = -1;
  std::map<int, char> pending_answers_;
};

class ProposalProgram : public NodeProgram {
public:
  explicit ProposalProgram(int delta) : delta_(delta) {}

  bool init(const NodeView& view) override {
    deg_ = view.degree;
    if (deg_ == 0) return false;
    if (deg_ > delta_)
      throw SimFaultError("proposal-mm: node of degree " + std::to_string(deg_) +
                          " (bound is " + std::to_string(delta_) + ")");
    if (!view.color) throw SimFaultError("proposal-mm: no 2-coloring supplied");
    if (*view.color != 0 && *view.color != 1)
      throw SimFaultError("proposal-mm: colors must be 0 (white) or 1 (black)");
    side_.start(deg_, *view.color == 0);
    return true;
  }

  Outbox send() override {
    ++round_;
    Outbox out;
    for (const auto& [port, c] : side_.send(round_)) out[port] = std::string(1, c);
    return out;
  }

  bool receive(const Inbox& inbox) override {
    std::map<int, char> in;
    for (const auto& [port, msg] : inbox) {
      if (msg.size() != 1) throw SimFaultError("proposal-mm: malformed message");
      in[port] = msg[0];
    }
    side_.receive(round_, in);
    return round_ < 2 * delta_;
  }

  std::map<int, Rat> output() const override {
    std::map<int, Rat> out;
    for (int p = 1; p <= deg_; ++p) out[p] = p == side_.matched_port() ? Rat(1) : Rat(0);
    return out;
  }

private:
  int delta_;
  int deg_ = 0;
  int round_ = 0;
  ProposalSide side_;
};

class ProposalSpec : public AlgorithmSpec {
public:
  explicit ProposalSpec(int delta) : delta_(delta) {
    if (delta < 1) throw std::invalid_argument("proposal-mm: delta must be >= 1");
  }
  std::string name() const override { return "proposal-mm(" + std::to_string(delta_) + ")"; }
  int round_budget() const override { return 2 * delta_; }
  std::unique_ptr<NodeProgram> instantiate() const override {
    return std::make_unique<ProposalProgram>(delta_);
  }

private:
  int delta_;
};

// ---------------------------------------------------------------------------
// The double-cover stage. Every node plays both of its cover copies: the
// first copy is white (a proposer), the second black (an acceptor). The lift
// of an edge crosses copies, so the two halves of each real message swap
// sides on arrival: what my white copy says reaches your black copy and vice
// versa. 2*delta rounds of proposal produce a maximal matching M' of the
// cover; folding it back gives x(port) = (matched_white + matched_black)/2,
// a half-integral feasible solution in which an unsaturated node always has
// the saturated neighbors the later stages rely on. One more round announces
// node loads so every node learns which incident edges are half-saturated
// (both endpoint loads exactly 1/2).

class AlmostSatCore {
public:
  // delta is the globally known degree bound of this stage (2d+2).
  void start(int degree, int delta) {
    deg_ = degree;
    delta_ = delta;
    if (deg_ > delta_)
      throw SimFaultError("almost-sat: node of degree " + std::to_string(deg_) +
                          " (bound is " + std::to_string(delta_) + ")");
    white_.start(deg_, true);
    black_.start(deg_, false);
    half_.assign(deg_ + 1, false);
  }

  int total_rounds() const { return 2 * delta_ + 1; }

  Outbox send(int round) {
    Outbox out;
    if (round <= 2 * delta_) {
      auto w = white_.send(round);
      auto b = black_.send(round);
      for (int p = 1; p <= deg_; ++p) {
        auto wi = w.find(p);
        auto bi = b.find(p);
        if (wi == w.end() && bi == b.end()) continue;
        Message msg = "--";
        if (wi != w.end()) msg[0] = wi->second;
        if (bi != b.end()) msg[1] = bi->second;
        out[p] = msg;
      }
    } else {
      Message msg = load().str();
      for (int p = 1; p <= deg_; ++p) out[p] = msg;
    }
    return out;
  }

  void receive(int round, const Inbox& inbox) {
    if (round <= 2 * delta_) {
      std::map<int, char> for_white, for_black;
      for (const auto& [port, msg] : inbox) {
        if (msg.size() != 2) throw SimFaultError("almost-sat: malformed cover message");
        // msg[0] came from the neighbor's white copy, whose lift partner here
        // is the black copy; msg[1] symmetrically goes to the white copy.
        if (msg[0] != '-') for_black[port] = msg[0];
        if (msg[1] != '-') for_white[port] = msg[1];
      }
      white_.receive(round, for_white);
      black_.receive(round, for_black);
    } else {
      Rat mine = load();
      for (int p = 1; p <= deg_; ++p) {
        auto it = inbox.find(p);
        if (it == inbox.end()) throw SimFaultError("almost-sat: missing load message");
        Rat far = parse_rat_msg(it->second, "almost-sat");
        half_[p] = mine == Rat(1, 2) && far == Rat(1, 2);
      }
    }
  }

  Rat xbar(int port) const {
    int hits = (white_.matched_port() == port ? 1 : 0) + (black_.matched_port() == port ? 1 : 0);
    return Rat(hits, 2);
  }

  Rat load() const {
    int hits = (white_.matched_port() > 0 ? 1 : 0) + (black_.matched_port() > 0 ? 1 : 0);
    return Rat(hits, 2);
  }

  bool half_saturated(int port) const { return half_.at(port); }

private:
  int deg_ = 0;
  int delta_ = 0;
  ProposalSide white_, black_;
  std::vector<bool> half_;
};

class AlmostSatProgram : public NodeProgram {
public:
  explicit AlmostSatProgram(int delta) : delta_(delta) {}

  bool init(const NodeView& view) override {
    deg_ = view.degree;
    if (deg_ == 0) return false;
    core_.start(deg_, delta_);
    return true;
  }

  Outbox send() override {
    ++round_;
    return core_.send(round_);
  }

  bool receive(const Inbox& inbox) override {
    core_.receive(round_, inbox);
    return round_ < core_.total_rounds();
  }

  std::map<int, Rat> output() const override {
    std::map<int, Rat> out;
    for (int p = 1; p <= deg_; ++p) out[p] = core_.xbar(p);
    return out;
  }

private:
  int delta_;
  int deg_ = 0;
  int round_ = 0;
  AlmostSatCore core_;
};

class AlmostSatSpec : public AlgorithmSpec {
public:
  explicit AlmostSatSpec(int d) : d_(d) {
    if (d < 0) throw std::invalid_argument("almost-sat: d must be >= 0");
  }
  std::string name() const override { return "almost-sat(" + std::to_string(2 * d_ + 2) + ")"; }
  int round_budget() const override { return 2 * (2 * d_ + 2) + 1; }
  std::unique_ptr<NodeProgram> instantiate() const override {
    return std::make_unique<AlmostSatProgram>(2 * d_ + 2);
  }

private:
  int d_;
};

// ---------------------------------------------------------------------------
// Runs an inner node program on a sub-instance whose edges sit behind a
// subset of the real ports, renumbered 1..k in ascending order. Messages are
// relayed verbatim in both directions; the composite stays synchronous
// because the enclosing schedule reserves a fixed window for the inner phase
// regardless of when the inner program halts.

class InnerRelay {
public:
  void start(const AlgorithmSpec& inner, std::vector<int> real_ports) {
    ports_ = std::move(real_ports);
    for (std::size_t i = 0; i < ports_.size(); ++i) inv_[ports_[i]] = static_cast<int>(i) + 1;
    prog_ = inner.instantiate();
    NodeView view;
    view.degree = static_cast<int>(ports_.size());
    active_ = prog_->init(view);
  }

  Outbox send(int inner_round) {
    (void)inner_round;
    Outbox out;
    if (!active_) return out;
    for (const auto& [k, msg] : prog_->send()) {
      if (k < 1 || k > static_cast<int>(ports_.size()))
        throw SimFaultError("inner algorithm sent on nonexistent port");
      out[ports_[k - 1]] = msg;
    }
    return out;
  }

  void receive(int inner_round, const Inbox& real_in) {
    (void)inner_round;
    Inbox inner_in;
    for (const auto& [port, msg] : real_in) {
      auto it = inv_.find(port);
      if (it == inv_.end())
        throw SimFaultError("message outside the sub-instance during its reserved window");
      inner_in[it->second] = msg;
    }
    if (active_) {
      active_ = prog_->receive(inner_in);
    } else if (!inner_in.empty()) {
      throw SimFaultError("message for a halted inner algorithm");
    }
  }

  bool finished() const { return !active_; }

  // Inner outputs keyed by real port; call only after the window ends.
  std::map<int, Rat> outputs_by_real_port() const {
    std::map<int, Rat> out;
    if (ports_.empty()) return out;
    auto io = prog_->output();
    if (io.size() != ports_.size())
      throw SimFaultError("inner algorithm output does not cover its ports");
    for (const auto& [k, value] : io) {
      if (k < 1 || k > static_cast<int>(ports_.size()))
        throw SimFaultError("inner algorithm output on nonexistent port");
      out[ports_[k - 1]] = value;
    }
    return out;
  }

private:
  std::unique_ptr<NodeProgram> prog_;
  std::vector<int> ports_;
  std::map<int, int> inv_;
  bool active_ = false;
};

// ---------------------------------------------------------------------------
// Odd step, delta = 2d+1. Round 1 exchanges port numbers, so both endpoints
// learn each edge's label {i,j}. Round 2 exchanges per-label degrees, which
// settles Mid versus End. The Mid subgraph (max degree <= 2d) is solved by
// the inner algorithm inside a 5*(2d)^3-round window. The labels then get two
// rounds each, in (min,max)-lexicographic order: endpoints of an End edge
// exchange current loads and both evaluate min{1 - x[u], 1 - x[v]}; when a
// node carries two End edges of one label it is the middle of a 2-edge path,
// evaluates its lower-numbered port first and tells both neighbors the
// result in the second round.

class OddStepProgram : public NodeProgram {
public:
  OddStepProgram(int d, std::shared_ptr<const AlgorithmSpec> inner)
      : d_(d), delta_(2 * d + 1), inner_(std::move(inner)) {
    inner_window_ = 5 * (2 * d_) * (2 * d_) * (2 * d_);
    for (int i = 1; i <= delta_; ++i)
      for (int j = i; j <= delta_; ++j) labels_.push_back({i, j});
    total_ = 2 + inner_window_ + 2 * static_cast<int>(labels_.size());
  }

  bool init(const NodeView& view) override {
    deg_ = view.degree;
    if (deg_ == 0) return false;
    if (deg_ > delta_)
      throw SimFaultError("mfm: node of degree " + std::to_string(deg_) + " (bound is " +
                          std::to_string(delta_) + ")");
    label_.assign(deg_ + 1, {0, 0});
    mid_.assign(deg_ + 1, false);
    value_.assign(deg_ + 1, Rat(0));
    assigned_.assign(deg_ + 1, false);
    return true;
  }

  Outbox send() override {
    ++round_;
    Outbox out;
    if (round_ == 1) {
      for (int p = 1; p <= deg_; ++p) out[p] = std::to_string(p);
    } else if (round_ == 2) {
      for (int p = 1; p <= deg_; ++p) out[p] = std::to_string(label_degree(label_[p]));
    } else if (round_ <= 2 + inner_window_) {
      out = relay_.send(round_ - 2);
    } else {
      int phase = round_ - (2 + inner_window_) - 1;  // 0-based over the label rounds
      const auto& lab = labels_[phase / 2];
      if (phase % 2 == 0) {
        // First label round: every End endpoint announces its load and its
        // End-degree for this label.
        end_ports_ = end_ports_for(lab);
        if (!end_ports_.empty()) {
          Message msg = load_.str() + "|" + std::to_string(end_ports_.size());
          for (int p : end_ports_) out[p] = msg;
        }
      } else if (end_ports_.size() == 2) {
        out[end_ports_[0]] = value_[end_ports_[0]].str();
        out[end_ports_[1]] = value_[end_ports_[1]].str();
      }
    }
    return out;
  }

  bool receive(const Inbox& inbox) override {
    if (round_ == 1) {
      for (int p = 1; p <= deg_; ++p) {
        auto it = inbox.find(p);
        if (it == inbox.end()) throw SimFaultError("mfm: missing port-number message");
        int far = parse_small_int(it->second);
        label_[p] = {std::min(p, far), std::max(p, far)};
      }
    } else if (round_ == 2) {
      for (int p = 1; p <= deg_; ++p) {
        auto it = inbox.find(p);
        if (it == inbox.end()) throw SimFaultError("mfm: missing label-degree message");
        int far_ldeg = parse_small_int(it->second);
        mid_[p] = label_degree(label_[p]) == 2 && far_ldeg == 2;
      }
      std::vector<int> mid_ports;
      for (int p = 1; p <= deg_; ++p)
        if (mid_[p]) mid_ports.push_back(p);
      if (static_cast<int>(mid_ports.size()) > 2 * d_)
        throw SimFaultError("mfm: Mid subgraph degree exceeds " + std::to_string(2 * d_));
      relay_.start(*inner_, std::move(mid_ports));
    } else if (round_ <= 2 + inner_window_) {
      relay_.receive(round_ - 2, inbox);
      if (round_ == 2 + inner_window_) {
        if (!relay_.finished()) throw SimFaultError("mfm: inner algorithm overran its window");
        for (const auto& [p, x] : relay_.outputs_by_real_port()) {
          value_[p] = x;
          assigned_[p] = true;
          load_ = load_ + x;
        }
      }
    } else {
      int phase = round_ - (2 + inner_window_) - 1;
      if (phase % 2 == 0) {
        receive_label_first(inbox);
      } else {
        receive_label_second(inbox);
      }
    }
    return round_ < total_;
  }

  std::map<int, Rat> output() const override {
    std::map<int, Rat> out;
    for (int p = 1; p <= deg_; ++p) out[p] = value_[p];
    return out;
  }

private:
  int label_degree(std::pair<int, int> lab) const {
    int c = 0;
    for (int p = 1; p <= deg_; ++p)
      if (label_[p] == lab) ++c;
    return c;
  }

  std::vector<int> end_ports_for(std::pair<int, int> lab) const {
    std::vector<int> ports;
    for (int p = 1; p <= deg_; ++p)
      if (label_[p] == lab && !mid_[p]) ports.push_back(p);
    return ports;
  }

  static int parse_small_int(const Message& msg) {
    if (msg.empty() || msg.size() > 9) throw SimFaultError("mfm: malformed integer message");
    int v = 0;
    for (char c : msg) {
      if (c < '0' || c > '9') throw SimFaultError("mfm: malformed integer message");
      v = v * 10 + (c - '0');
    }
    return v;
  }

  Rat slack(const Rat& load) const {
    bool clamped = false;
    Rat s = Rat::sub_clamped(Rat(1), load, &clamped);
    if (clamped) throw SimFaultError("mfm: node load exceeded 1 during the End phase");
    return s;
  }

  void receive_label_first(const Inbox& inbox) {
    if (end_ports_.empty()) return;
    struct Far {
      Rat load;
      int edeg;
    };
    std::map<int, Far> far;
    for (int p : end_ports_) {
      auto it = inbox.find(p);
      if (it == inbox.end()) throw SimFaultError("mfm: missing End-phase message");
      auto bar = it->second.find('|');
      if (bar == Message::npos) throw SimFaultError("mfm: malformed End-phase message");
      far[p] = {parse_rat_msg(it->second.substr(0, bar), "mfm"),
                parse_small_int(it->second.substr(bar + 1))};
    }
    if (end_ports_.size() == 1) {
      int p = end_ports_[0];
      if (far[p].edeg == 1) {
        Rat x = min(slack(load_), slack(far[p].load));
        value_[p] = x;
        assigned_[p] = true;
        load_ = load_ + x;
        end_ports_.clear();  // settled; nothing to do in the second round
      } else if (far[p].edeg != 2) {
        throw SimFaultError("mfm: impossible End-degree " + std::to_string(far[p].edeg));
      }
      // far degree 2: the middle node decides; its values arrive next round.
    } else if (end_ports_.size() == 2) {
      int p1 = end_ports_[0], p2 = end_ports_[1];
      if (far[p1].edeg != 1 || far[p2].edeg != 1)
        throw SimFaultError("mfm: End path of length > 2");
      Rat x1 = min(slack(load_), slack(far[p1].load));
      value_[p1] = x1;
      assigned_[p1] = true;
      load_ = load_ + x1;
      Rat x2 = min(slack(load_), slack(far[p2].load));
      value_[p2] = x2;
      assigned_[p2] = true;
      load_ = load_ + x2;
    } else {
      throw SimFaultError("mfm: more than two End edges of one label at one node");
    }
  }

  void receive_label_second(const Inbox& inbox) {
    if (end_ports_.size() == 1) {
      int p = end_ports_[0];
      auto it = inbox.find(p);
      if (it == inbox.end()) throw SimFaultError("mfm: missing value from the path middle");
      Rat x = parse_rat_msg(it->second, "mfm");
      value_[p] = x;
      assigned_[p] = true;
      load_ = load_ + x;
    }
    end_ports_.clear();
  }

  int d_;
  int delta_;
  std::shared_ptr<const AlgorithmSpec> inner_;
  int inner_window_ = 0;
  int total_ = 0;
  std::vector<std::pair<int, int>> labels_;

  int deg_ = 0;
  int round_ = 0;
  std::vector<std::pair<int, int>> label_;  // by port
  std::vector<bool> mid_;                   // by port
  std::vector<Rat> value_;                  // by port
  std::vector<bool> assigned_;              // by port
  std::vector<int> end_ports_;              // End ports of the label in flight
  Rat load_;
  InnerRelay relay_;
};

// ---------------------------------------------------------------------------
// Even step, delta = 2d+2: almost-sat for 2*delta+1 rounds, then the inner
// algorithm on the half-saturated subgraph (its degree bound 2d+1 is checked,
// not assumed) inside a 5*(2d+1)^3-round window; the result is
// x = xbar + x'/2.

class EvenStepProgram : public NodeProgram {
public:
  EvenStepProgram(int d, std::shared_ptr<const AlgorithmSpec> inner)
      : d_(d), delta_(2 * d + 2), inner_(std::move(inner)) {
    int m = 2 * d_ + 1;
    inner_window_ = 5 * m * m * m;
    asat_rounds_ = 2 * delta_ + 1;
    total_ = asat_rounds_ + inner_window_;
  }

  bool init(const NodeView& view) override {
    deg_ = view.degree;
    if (deg_ == 0) return false;
    core_.start(deg_, delta_);
    return true;
  }

  Outbox send() override {
    ++round_;
    if (round_ <= asat_rounds_) return core_.send(round_);
    return relay_.send(round_ - asat_rounds_);
  }

  bool receive(const Inbox& inbox) override {
    if (round_ <= asat_rounds_) {
      core_.receive(round_, inbox);
      if (round_ == asat_rounds_) {
        std::vector<int> half_ports;
        for (int p = 1; p <= deg_; ++p)
          if (core_.half_saturated(p)) half_ports.push_back(p);
        if (static_cast<int>(half_ports.size()) > 2 * d_ + 1)
          throw SimFaultError("mfm: half-saturated subgraph degree exceeds " +
                              std::to_string(2 * d_ + 1));
        relay_.start(*inner_, std::move(half_ports));
      }
    } else {
      relay_.receive(round_ - asat_rounds_, inbox);
      if (round_ == total_) {
        if (!relay_.finished()) throw SimFaultError("mfm: inner algorithm overran its window");
        inner_values_ = relay_.outputs_by_real_port();
      }
    }
    return round_ < total_;
  }

  std::map<int, Rat> output() const override {
    std::map<int, Rat> out;
    for (int p = 1; p <= deg_; ++p) {
      auto it = inner_values_.find(p);
      out[p] = it == inner_values_.end() ? core_.xbar(p) : core_.xbar(p) + it->second.half();
    }
    return out;
  }

private:
  int d_;
  int delta_;
  std::shared_ptr<const AlgorithmSpec> inner_;
  int inner_window_ = 0;
  int asat_rounds_ = 0;
  int total_ = 0;

  int deg_ = 0;
  int round_ = 0;
  AlmostSatCore core_;
  InnerRelay relay_;
  std::map<int, Rat> inner_values_;
};

class MfmSpec : public AlgorithmSpec {
public:
  explicit MfmSpec(int delta) : delta_(delta) {
    if (delta < 1) throw std::invalid_argument("mfm: delta must be >= 1");
  }
  std::string name() const override { return "mfm(" + std::to_string(delta_) + ")"; }
  int round_budget() const override { return mfm_rounds(delta_); }
  std::unique_ptr<NodeProgram> instantiate() const override {
    if (delta_ <= 2) return std::make_unique<Base2Program>();
    if (delta_ % 2 == 1) {
      int d = (delta_ - 1) / 2;
      return std::make_unique<OddStepProgram>(d, std::make_shared<MfmSpec>(2 * d));
    }
    int d = (delta_ - 2) / 2;
    return std::make_unique<EvenStepProgram>(d, std::make_shared<MfmSpec>(2 * d + 1));
  }

private:
  int delta_;
};

}  // namespace

std::unique_ptr<AlgorithmSpec> base_case() { return std::make_unique<Base2Spec>(); }

std::unique_ptr<AlgorithmSpec> bipartite_proposal_mm(int delta) {
  return std::make_unique<ProposalSpec>(delta);
}

std::unique_ptr<AlgorithmSpec> almost_saturating(int d) {
  return std::make_unique<AlmostSatSpec>(d);
}

std::unique_ptr<AlgorithmSpec> mfm(int delta) { return std::make_unique<MfmSpec>(delta); }

int mfm_rounds(int delta) {
  if (delta < 1) throw std::invalid_argument("mfm: delta must be >= 1");
  if (delta <= 2) return 1;
  if (delta % 2 == 1) {
    int d = (delta - 1) / 2;
    return 2 + 5 * (2 * d) * (2 * d) * (2 * d) + delta * (delta + 1);
  }
  int d = (delta - 2) / 2;
  int m = 2 * d + 1;
  return (2 * delta + 1) + 5 * m * m * m;
}

std::unique_ptr<AlgorithmSpec> make_algorithm(const std::string& name, int delta) {
  if (name == "mfm") return mfm(delta);
  if (name == "base2") return base_case();
  if (name == "proposal-mm") return bipartite_proposal_mm(delta);
  if (name == "almost-sat") {
    if (delta < 2 || delta % 2 != 0)
      throw std::invalid_argument("almost-sat: delta must be even and >= 2");
    return almost_saturating((delta - 2) / 2);
  }
  throw std::invalid_argument("unknown algorithm '" + name +
                              "' (expected mfm, base2, almost-sat or proposal-mm)");
}

std::vector<std::pair<int, int>> edge_labels(const PortGraph& g) {
  std::vector<std::pair<int, int>> labels;
  labels.reserve(g.edge_count());
  for (const Edge& e : g.edges())
    labels.push_back({std::min(e.pu, e.pv), std::max(e.pu, e.pv)});
  return labels;
}

std::vector<bool> edge_is_mid(const PortGraph& g) {
  auto labels = edge_labels(g);
  std::map<std::pair<NodeId, std::pair<int, int>>, int> ldeg;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    ++ldeg[{g.edges()[id].u, labels[id]}];
    ++ldeg[{g.edges()[id].v, labels[id]}];
  }
  std::vector<bool> mid(g.edge_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges()[id];
    mid[id] = ldeg[{e.u, labels[id]}] == 2 && ldeg[{e.v, labels[id]}] == 2;
  }
  return mid;
}

}  // namespace fracmatch

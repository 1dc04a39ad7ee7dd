#include "fracmatch/verify.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace fracmatch {

using ordered_json = nlohmann::ordered_json;

Rat node_load(const PortGraph& g, const EdgeAssignment& x, NodeId v) {
  Rat load;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges()[id];
    if (e.u == v) load = load + x.at(id);
    if (e.v == v) load = load + x.at(id);
  }
  return load;
}

namespace {

std::vector<Rat> all_loads(const PortGraph& g, const EdgeAssignment& x) {
  if (static_cast<int>(x.size()) != g.edge_count())
    throw std::invalid_argument("assignment size does not match edge count");
  std::vector<Rat> load(g.node_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges()[id];
    load[g.index_of(e.u)] = load[g.index_of(e.u)] + x[id];
    load[g.index_of(e.v)] = load[g.index_of(e.v)] + x[id];
  }
  return load;
}

const Rat& one() {
  static const Rat r(1);
  return r;
}

const Rat& half() {
  static const Rat r(1, 2);
  return r;
}

}  // namespace

VerifyReport verify(const PortGraph& g, const EdgeAssignment& x,
                    std::optional<ValueSet> value_set) {
  VerifyReport rep;
  rep.value_set = value_set;
  auto load = all_loads(g, x);
  for (int i = 0; i < g.node_count(); ++i) {
    if (load[i] == one()) rep.saturated.push_back(g.node_at(i));
    if (load[i] > one()) {
      rep.feasible = false;
      rep.overloaded.push_back({g.node_at(i), load[i]});
    }
  }
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges()[id];
    const Rat& lu = load[g.index_of(e.u)];
    const Rat& lv = load[g.index_of(e.v)];
    if (lu != one() && lv != one()) {
      rep.maximal = false;
      rep.unsaturated_edges.push_back({id, lu, lv});
    }
    VerifyReport::EdgeVerdict ev;
    ev.edge = id;
    ev.value = x[id];
    ev.cls = class_index(x[id]);
    if (value_set) {
      ev.in_set = value_set->contains(x[id]);
      if (!ev.in_set) rep.values_ok = false;
    }
    rep.edges.push_back(ev);
  }
  return rep;
}

std::string verify_report_json(const VerifyReport& rep) {
  ordered_json j;
  j["feasible"] = rep.feasible;
  j["maximal"] = rep.maximal;
  j["values_ok"] = rep.values_ok;
  j["ok"] = rep.ok();
  j["value_set"] = rep.value_set ? ordered_json(rep.value_set->str()) : ordered_json(nullptr);
  j["saturated"] = rep.saturated;
  j["overloaded"] = ordered_json::array();
  for (const auto& o : rep.overloaded)
    j["overloaded"].push_back({{"node", o.node}, {"load", o.load.str()}});
  j["unsaturated_edges"] = ordered_json::array();
  for (const auto& u : rep.unsaturated_edges)
    j["unsaturated_edges"].push_back(
        {{"edge", u.edge}, {"load_u", u.load_u.str()}, {"load_v", u.load_v.str()}});
  j["edges"] = ordered_json::array();
  for (const auto& ev : rep.edges) {
    ordered_json je = {{"id", ev.edge}, {"value", ev.value.str()}, {"class", ev.cls}};
    if (rep.value_set) je["in_set"] = ev.in_set;
    j["edges"].push_back(je);
  }
  return j.dump(2);
}

namespace {

void require_half_integral(const EdgeAssignment& x) {
  for (const Rat& v : x)
    if (!(v.is_zero() || v == half() || v.is_one()))
      throw std::invalid_argument("assignment is not half-integral (found " + v.str() + ")");
}

}  // namespace

AlmostSatReport check_almost_saturating(const PortGraph& g, const EdgeAssignment& x) {
  require_half_integral(x);
  AlmostSatReport rep;
  auto load = all_loads(g, x);
  for (int i = 0; i < g.node_count(); ++i) {
    NodeId v = g.node_at(i);
    if (load[i] == one()) continue;
    bool has_saturated_neighbor = false;
    bool all_neighbors_saturated = true;
    bool any_neighbor = false;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      const Edge& e = g.edges()[id];
      if (e.u != v && e.v != v) continue;
      NodeId w = e.u == v ? e.v : e.u;
      any_neighbor = true;
      if (load[g.index_of(w)] == one())
        has_saturated_neighbor = true;
      else
        all_neighbors_saturated = false;
    }
    if (load[i].is_zero()) {
      if (any_neighbor && !all_neighbors_saturated) {
        rep.ok = false;
        rep.violations.push_back({v, 1, load[i]});
      }
    } else if (load[i] == half()) {
      if (!has_saturated_neighbor) {
        rep.ok = false;
        rep.violations.push_back({v, 2, load[i]});
      }
    } else {
      // Half-integral loads other than 0, 1/2, 1 cannot satisfy either clause.
      rep.ok = false;
      rep.violations.push_back({v, 2, load[i]});
    }
  }
  return rep;
}

SaturationClasses classify_saturation(const PortGraph& g, const EdgeAssignment& x) {
  require_half_integral(x);
  SaturationClasses out;
  auto load = all_loads(g, x);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges()[id];
    const Rat& lu = load[g.index_of(e.u)];
    const Rat& lv = load[g.index_of(e.v)];
    if (lu == half() && lv == half())
      out.half.push_back(id);
    else if (lu == one() || lv == one())
      out.full.push_back(id);
    else
      out.other.push_back(id);
  }
  return out;
}

}  // namespace fracmatch

#include "maci/workflow.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace maci {

std::string to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::temporal: return "temporal";
    case EdgeKind::spatial: return "spatial";
    case EdgeKind::resource: return "resource";
    case EdgeKind::safety: return "safety";
    case EdgeKind::data: return "data";
  }
  return "temporal";
}

std::string to_string(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::temporal: return "temporal";
    case ConstraintKind::spatial: return "spatial";
    case ConstraintKind::resource: return "resource";
    case ConstraintKind::safety: return "safety";
    case ConstraintKind::data: return "data";
    case ConstraintKind::preference: return "preference";
  }
  return "temporal";
}

std::string to_string(ConstraintOrigin o) {
  switch (o) {
    case ConstraintOrigin::explicit_stated: return "explicit";
    case ConstraintOrigin::implicit: return "implicit";
    case ConstraintOrigin::derived: return "derived";
  }
  return "explicit";
}

EdgeKind edge_kind_from_string(const std::string& s) {
  if (s == "temporal") return EdgeKind::temporal;
  if (s == "spatial") return EdgeKind::spatial;
  if (s == "resource") return EdgeKind::resource;
  if (s == "safety") return EdgeKind::safety;
  if (s == "data") return EdgeKind::data;
  throw std::invalid_argument("unknown edge kind: " + s);
}

ConstraintKind constraint_kind_from_string(const std::string& s) {
  if (s == "preference") return ConstraintKind::preference;
  switch (edge_kind_from_string(s)) {
    case EdgeKind::temporal: return ConstraintKind::temporal;
    case EdgeKind::spatial: return ConstraintKind::spatial;
    case EdgeKind::resource: return ConstraintKind::resource;
    case EdgeKind::safety: return ConstraintKind::safety;
    case EdgeKind::data: return ConstraintKind::data;
  }
  throw std::invalid_argument("unknown constraint kind: " + s);
}

ConstraintOrigin origin_from_string(const std::string& s) {
  if (s == "explicit") return ConstraintOrigin::explicit_stated;
  if (s == "implicit") return ConstraintOrigin::implicit;
  if (s == "derived") return ConstraintOrigin::derived;
  throw std::invalid_argument("unknown constraint origin: " + s);
}

bool valid_rule_code(const std::string& rule) {
  if (rule.size() < 2 || rule.size() > 3 || rule[0] != 'R') return false;
  int n = 0;
  for (size_t i = 1; i < rule.size(); ++i) {
    if (!isdigit(static_cast<unsigned char>(rule[i]))) return false;
    n = n * 10 + (rule[i] - '0');
  }
  return n >= 1 && n <= 12;
}

void ConstraintSet::add(const Constraint& c) {
  if (contains(c.id)) throw std::invalid_argument("duplicate constraint id: " + c.id);
  items.push_back(c);
}

bool ConstraintSet::contains(const std::string& id) const {
  return std::any_of(items.begin(), items.end(),
                     [&](const Constraint& c) { return c.id == id; });
}

const RoleNode* Workflow::find_node(const std::string& id) const {
  for (const auto& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

RoleNode* Workflow::find_node(const std::string& id) {
  for (auto& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

const DependencyEdge* Workflow::find_edge(const std::string& id) const {
  for (const auto& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

void Workflow::add_node(const RoleNode& n) {
  if (find_node(n.id)) throw std::invalid_argument("duplicate node id: " + n.id);
  nodes.push_back(n);
}

void Workflow::add_edge(const DependencyEdge& e) {
  if (find_edge(e.id)) throw std::invalid_argument("duplicate edge id: " + e.id);
  if (!find_node(e.from_node))
    throw std::invalid_argument("dangling from_node: " + e.from_node);
  if (!find_node(e.to_node))
    throw std::invalid_argument("dangling to_node: " + e.to_node);
  if (e.from_node == e.to_node)
    throw std::invalid_argument("self-loop edge: " + e.id);
  edges.push_back(e);
  if (e.kind == EdgeKind::temporal && temporal_cycle_exists(*this)) {
    edges.pop_back();
    throw std::invalid_argument("temporal cycle introduced by edge: " + e.id);
  }
}

bool temporal_cycle_exists(const Workflow& w) {
  // Iterative DFS with colors over the temporal-edge subgraph.
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& e : w.edges)
    if (e.kind == EdgeKind::temporal) adj[e.from_node].push_back(e.to_node);

  std::map<std::string, int> color;  // 0 white, 1 gray, 2 black
  std::function<bool(const std::string&)> visit = [&](const std::string& u) {
    color[u] = 1;
    for (const auto& v : adj[u]) {
      if (color[v] == 1) return true;
      if (color[v] == 0 && visit(v)) return true;
    }
    color[u] = 2;
    return false;
  };
  for (const auto& n : w.nodes)
    if (color[n.id] == 0 && visit(n.id)) return true;
  return false;
}

StructureReport validate_structure(const Workflow& w) {
  StructureReport report;
  auto add = [&](const std::string& d) { report.defects.push_back(d); };

  std::set<std::string> node_ids;
  for (const auto& n : w.nodes) {
    if (!node_ids.insert(n.id).second) add("duplicate node id: " + n.id);
    if (n.qualifications.empty())
      add("node " + n.id + ": empty qualification set");
  }
  std::set<std::string> edge_ids;
  for (const auto& e : w.edges) {
    if (!edge_ids.insert(e.id).second) add("duplicate edge id: " + e.id);
    if (!node_ids.count(e.from_node))
      add("edge " + e.id + ": dangling from_node " + e.from_node);
    if (!node_ids.count(e.to_node))
      add("edge " + e.id + ": dangling to_node " + e.to_node);
    if (e.from_node == e.to_node) add("edge " + e.id + ": self-loop");
    if (e.kind == EdgeKind::temporal && !e.metadata.count("min_gap"))
      add("edge " + e.id + ": temporal edge missing min_gap metadata");
    if (e.kind == EdgeKind::spatial && !e.metadata.count("route"))
      add("edge " + e.id + ": spatial edge missing route metadata");
  }

  if (temporal_cycle_exists(w)) {
    std::string members;
    for (const auto& e : w.edges)
      if (e.kind == EdgeKind::temporal) members += " " + e.id;
    add("temporal-edge cycle among:" + members);
  }

  std::set<std::string> cids;
  std::set<std::string> role_names;
  for (const auto& n : w.nodes) role_names.insert(n.role_name);
  for (const auto& c : w.constraints.items) {
    if (!cids.insert(c.id).second) add("duplicate constraint id: " + c.id);
    if (!valid_rule_code(c.rule))
      add("constraint " + c.id + ": unknown rule code " + c.rule);
    if (c.priority < 1 || c.priority > 5)
      add("constraint " + c.id + ": priority out of range");
    if (c.hard && c.priority != 5)
      add("constraint " + c.id + ": hard constraint must have priority 5");
    if (!c.relates.empty() && c.relates.size() != 2)
      add("constraint " + c.id + ": relates must name exactly two roles");
    for (const auto& r : c.relates)
      if (!role_names.count(r))
        add("constraint " + c.id + ": relates unknown role " + r);
  }

  if (w.metrics.w_satisfaction <= 0 && w.metrics.w_slack <= 0 &&
      w.metrics.w_idle <= 0)
    add("metric set: no strictly positive weight");

  return report;
}

ConstraintPartition partition_constraints(const ConstraintSet& set) {
  ConstraintPartition p;
  for (const auto& c : set.items) {
    switch (c.origin) {
      case ConstraintOrigin::explicit_stated: p.explicit_stated.push_back(c); break;
      case ConstraintOrigin::implicit: p.implicit.push_back(c); break;
      case ConstraintOrigin::derived: p.derived.push_back(c); break;
    }
  }
  return p;
}

}  // namespace maci

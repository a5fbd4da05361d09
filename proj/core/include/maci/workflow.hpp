#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace maci {

// Edge and constraint taxonomy. Constraints allow one extra kind (preference)
// that never appears on edges.
enum class EdgeKind { temporal, spatial, resource, safety, data };
enum class ConstraintKind { temporal, spatial, resource, safety, data, preference };
enum class ConstraintOrigin { explicit_stated, implicit, derived };

std::string to_string(EdgeKind k);
std::string to_string(ConstraintKind k);
std::string to_string(ConstraintOrigin o);
EdgeKind edge_kind_from_string(const std::string& s);
ConstraintKind constraint_kind_from_string(const std::string& s);
ConstraintOrigin origin_from_string(const std::string& s);

// A role to be performed by a person; monitoring agents attach per node.
struct RoleNode {
  std::string id;
  std::string role_name;
  std::set<std::string> qualifications;
  std::optional<std::string> assigned_person;
  std::optional<std::string> node_agent;
};

// Typed dependency between two roles. Metadata is string->string; integer
// values (minutes) are stored as decimal strings. Unknown keys are preserved.
struct DependencyEdge {
  std::string id;
  std::string from_node;
  std::string to_node;
  EdgeKind kind = EdgeKind::temporal;
  std::map<std::string, std::string> metadata;
  std::optional<std::string> edge_agent;
};

// Predicate = rule code from the schedule-checker catalog (R1..R12) plus
// parameters; free-text constraints are deliberately unsupported.
struct Constraint {
  std::string id;
  ConstraintOrigin origin = ConstraintOrigin::explicit_stated;
  ConstraintKind kind = ConstraintKind::temporal;
  bool hard = true;
  int priority = 5;  // 1..5, 5 = never relax
  std::string rule;  // "R1".."R12"
  std::map<std::string, std::string> params;
  std::vector<std::string> relates;  // role names; size 0 or 2
};

struct ConstraintSet {
  std::vector<Constraint> items;

  // Throws std::invalid_argument on duplicate constraint id.
  void add(const Constraint& c);
  bool contains(const std::string& id) const;
};

struct ConstraintPartition {
  std::vector<Constraint> explicit_stated;  // C_E
  std::vector<Constraint> implicit;         // C_I
  std::vector<Constraint> derived;          // C_D
};

// Weights for the workflow value function plus the normalization horizon.
struct MetricSet {
  double w_satisfaction = 1.0;
  double w_slack = 0.5;
  double w_idle = 0.25;
  int horizon_minutes = 480;
};

struct StructureReport {
  std::vector<std::string> defects;
  bool ok() const { return defects.empty(); }
};

class Workflow {
 public:
  std::vector<RoleNode> nodes;
  std::vector<DependencyEdge> edges;
  ConstraintSet constraints;
  MetricSet metrics;
  std::optional<double> score;  // last V value

  // Throw std::invalid_argument on duplicate id / dangling endpoint /
  // temporal cycle, leaving the workflow unchanged.
  void add_node(const RoleNode& n);
  void add_edge(const DependencyEdge& e);

  const RoleNode* find_node(const std::string& id) const;
  RoleNode* find_node(const std::string& id);
  const DependencyEdge* find_edge(const std::string& id) const;
};

// Lists every invariant violation; empty report == structurally valid.
StructureReport validate_structure(const Workflow& w);

// Splits by origin; concatenation of the three lists is a permutation of the
// input (order within each list preserved).
ConstraintPartition partition_constraints(const ConstraintSet& set);

// True iff the subgraph restricted to temporal edges has a cycle. Exposed for
// the DFS cross-check in tests.
bool temporal_cycle_exists(const Workflow& w);

bool valid_rule_code(const std::string& rule);

}  // namespace maci

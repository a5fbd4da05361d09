#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "maci/workflow.hpp"

namespace maci {

enum class AgentType { common, specialized };
enum class EfficiencyClass { light, standard };

struct AgentSpec {
  std::string id;
  std::string input_schema = "maci.task.v1";
  std::string output_schema = "maci.report.v1";
  AgentType agent_type = AgentType::common;
  std::set<std::string> capabilities;
  int context_window = 1024;  // hard-capped at 1024
  EfficiencyClass efficiency_class = EfficiencyClass::standard;
  double rating = 0.0;        // [0, 5]
  long registration_seq = 0;  // assigned by the repository
};

struct Requirement {
  std::set<std::string> required;  // non-empty
  std::string needed_input_schema = "maci.task.v1";
  std::string needed_output_schema = "maci.report.v1";
  std::optional<ConstraintKind> kind_hint;
};

struct Assignment {
  std::map<std::string, std::string> node_map;  // node id -> agent id
  std::map<std::string, std::string> edge_map;  // edge id -> agent id
  long total_distance = 0;
  std::vector<std::string> defects;  // unassignable elements
};

// Number of required tags the offered set does not cover: |required \ offered|.
int capability_distance(const std::set<std::string>& required,
                        const std::set<std::string>& offered);

class AgentRepository {
 public:
  // Throws std::invalid_argument on duplicate id or context_window > 1024.
  void register_agent(AgentSpec spec);

  const AgentSpec* find(const std::string& id) const;
  const std::vector<AgentSpec>& agents() const { return agents_; }
  size_t size() const { return agents_.size(); }

  // Three-step search: capability filter (distance < |required|, i.e. at
  // least one tag met), protocol schema filter, then sort by
  // (distance asc, rating desc, registration_seq asc).
  std::vector<AgentSpec> match(const Requirement& req) const;

 private:
  std::vector<AgentSpec> agents_;
  long next_seq_ = 1;
};

// Pure argmin over the whole repository per element (agents are not consumed,
// so per-element greedy equals the global optimum). Ties follow the match
// ordering (rating desc, then registration_seq asc).
Assignment assign_node_agents(const Workflow& w, const AgentRepository& repo);
Assignment assign_edge_agents(const Workflow& w, const AgentRepository& repo);

// Registers the ten stock monitoring agents. Throws if any id already exists.
void seed_common_agents(AgentRepository& repo);

// Capability tags an edge requires, derived from its kind (used by
// assign_edge_agents and exposed for tests).
std::set<std::string> edge_requirement_tags(EdgeKind kind);

}  // namespace maci

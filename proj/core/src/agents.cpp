#include "maci/agents.hpp"

#include <algorithm>
#include <stdexcept>

namespace maci {

int capability_distance(const std::set<std::string>& required,
                        const std::set<std::string>& offered) {
  int unmet = 0;
  for (const auto& tag : required)
    if (!offered.count(tag)) ++unmet;
  return unmet;
}

void AgentRepository::register_agent(AgentSpec spec) {
  if (find(spec.id)) throw std::invalid_argument("duplicate agent id: " + spec.id);
  if (spec.context_window > 1024)
    throw std::invalid_argument("context window exceeds 1024: " + spec.id);
  if (spec.rating < 0.0 || spec.rating > 5.0)
    throw std::invalid_argument("rating out of [0,5]: " + spec.id);
  spec.registration_seq = next_seq_++;
  agents_.push_back(std::move(spec));
}

const AgentSpec* AgentRepository::find(const std::string& id) const {
  for (const auto& a : agents_)
    if (a.id == id) return &a;
  return nullptr;
}

namespace {

bool match_order(const AgentSpec& a, int da, const AgentSpec& b, int db) {
  if (da != db) return da < db;
  if (a.rating != b.rating) return a.rating > b.rating;
  return a.registration_seq < b.registration_seq;
}

}  // namespace

std::vector<AgentSpec> AgentRepository::match(const Requirement& req) const {
  std::vector<std::pair<AgentSpec, int>> kept;
  const int bar = static_cast<int>(req.required.size());
  for (const auto& a : agents_) {
    int d = capability_distance(req.required, a.capabilities);
    if (d >= bar) continue;  // step 1: at least one tag met
    if (a.input_schema != req.needed_input_schema ||
        a.output_schema != req.needed_output_schema)
      continue;  // step 2: protocol verification
    kept.emplace_back(a, d);
  }
  std::stable_sort(kept.begin(), kept.end(), [](const auto& x, const auto& y) {
    return match_order(x.first, x.second, y.first, y.second);
  });
  std::vector<AgentSpec> out;
  out.reserve(kept.size());
  for (auto& [a, d] : kept) out.push_back(std::move(a));
  return out;
}

namespace {

// Shared argmin used by both assignment directions. Returns nullptr when the
// repository is empty (the only unassignable case under pure argmin).
const AgentSpec* argmin_agent(const AgentRepository& repo,
                              const std::set<std::string>& required,
                              int* achieved) {
  const AgentSpec* best = nullptr;
  int best_d = 0;
  for (const auto& a : repo.agents()) {
    int d = capability_distance(required, a.capabilities);
    if (!best || match_order(a, d, *best, best_d)) {
      best = &a;
      best_d = d;
    }
  }
  if (best && achieved) *achieved = best_d;
  return best;
}

}  // namespace

std::set<std::string> edge_requirement_tags(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::temporal: return {"temporal"};
    case EdgeKind::spatial: return {"spatial"};
    case EdgeKind::resource: return {"resource"};
    case EdgeKind::safety: return {"safety"};
    case EdgeKind::data: return {"data"};
  }
  return {};
}

Assignment assign_node_agents(const Workflow& w, const AgentRepository& repo) {
  Assignment out;
  for (const auto& n : w.nodes) {
    int d = 0;
    const AgentSpec* a = argmin_agent(repo, n.qualifications, &d);
    if (!a) {
      out.defects.push_back("node " + n.id + ": no agent available");
      continue;
    }
    out.node_map[n.id] = a->id;
    out.total_distance += d;
  }
  return out;
}

Assignment assign_edge_agents(const Workflow& w, const AgentRepository& repo) {
  Assignment out;
  for (const auto& e : w.edges) {
    int d = 0;
    const AgentSpec* a = argmin_agent(repo, edge_requirement_tags(e.kind), &d);
    if (!a) {
      out.defects.push_back("edge " + e.id + ": no agent available");
      continue;
    }
    out.edge_map[e.id] = a->id;
    out.total_distance += d;
  }
  return out;
}

void seed_common_agents(AgentRepository& repo) {
  auto mk = [](const std::string& id, std::set<std::string> caps, double rating,
               EfficiencyClass ec) {
    AgentSpec s;
    s.id = id;
    s.capabilities = std::move(caps);
    s.rating = rating;
    s.efficiency_class = ec;
    s.agent_type = AgentType::common;
    s.context_window = 1024;
    return s;
  };
  // Role Manager carries the top rating so capability ties on generic role
  // qualifications resolve to it deterministically.
  repo.register_agent(mk("role-manager",
                         {"role_tracking", "qualification_check", "role_transition",
                          "assignment_audit"},
                         4.9, EfficiencyClass::standard));
  repo.register_agent(mk("spatial",
                         {"spatial", "route", "location_tracking", "travel_time"},
                         4.6, EfficiencyClass::standard));
  repo.register_agent(mk("temporal",
                         {"temporal", "scheduling", "deadline_tracking",
                          "duration_check"},
                         4.8, EfficiencyClass::standard));
  repo.register_agent(mk("resource",
                         {"resource", "allocation", "capacity", "vehicle_tracking"},
                         4.5, EfficiencyClass::standard));
  repo.register_agent(mk("reasoning-explanation",
                         {"rationale", "explanation", "dependency_tracking", "data"},
                         4.4, EfficiencyClass::standard));
  repo.register_agent(mk("common-sense",
                         {"common_sense", "implicit_constraints", "practical_checks"},
                         4.3, EfficiencyClass::light));
  repo.register_agent(mk("constraint-validation",
                         {"validation", "constraint_check", "feasibility"},
                         4.7, EfficiencyClass::standard));
  repo.register_agent(mk("plan-evaluation", {"evaluation", "scoring", "metrics"},
                         4.2, EfficiencyClass::standard));
  repo.register_agent(mk("what-if-testing", {"simulation", "what_if", "robustness"},
                         4.1, EfficiencyClass::light));
  repo.register_agent(mk("compliance-safety",
                         {"safety", "compliance", "oven_watch", "supervision",
                          "hazard_monitoring"},
                         4.8, EfficiencyClass::standard));
}

}  // namespace maci

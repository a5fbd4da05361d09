#include "maci/planner.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "maci/checker.hpp"

namespace maci {

namespace {

Constraint make_constraint(std::string id, ConstraintOrigin origin,
                           ConstraintKind kind, bool hard, int priority,
                           std::string rule,
                           std::map<std::string, std::string> params = {},
                           std::vector<std::string> relates = {}) {
  Constraint c;
  c.id = std::move(id);
  c.origin = origin;
  c.kind = kind;
  c.hard = hard;
  c.priority = priority;
  c.rule = std::move(rule);
  c.params = std::move(params);
  c.relates = std::move(relates);
  return c;
}

}  // namespace

KnowledgePack airport_pack() {
  KnowledgePack pack;
  pack.id = "airport";
  pack.rules.push_back([](const Scenario& s) {
    std::vector<Constraint> out;
    if (!s.flights.empty())
      out.push_back(make_constraint(
          "ci_luggage_claim", ConstraintOrigin::implicit, ConstraintKind::temporal,
          true, 5, "R4", {{"luggage_minutes", "30"}}));
    return out;
  });
  pack.rules.push_back([](const Scenario& s) {
    std::vector<Constraint> out;
    for (const auto& flyer : s.rental_flyers) {
      if (s.flights.count(flyer)) {
        out.push_back(make_constraint(
            "ci_car_rental", ConstraintOrigin::implicit, ConstraintKind::temporal,
            true, 5, "R5", {{"rental_minutes", "30"}, {"flyer", flyer}}));
        break;
      }
    }
    return out;
  });
  return pack;
}

KnowledgePack household_pack() {
  KnowledgePack pack;
  pack.id = "household";
  pack.rules.push_back([](const Scenario&) {
    return std::vector<Constraint>{make_constraint(
        "ci_simultaneous_cooking", ConstraintOrigin::implicit,
        ConstraintKind::resource, true, 5, "R9",
        {{"simultaneous_cooking", "allowed"}})};
  });
  pack.rules.push_back([](const Scenario& s) {
    std::vector<Constraint> out;
    for (const auto& pref : s.soft_preferences)
      out.push_back(make_constraint("ci_pref_" + pref.rule,
                                    ConstraintOrigin::implicit,
                                    ConstraintKind::preference, false,
                                    pref.priority, pref.rule, pref.params));
    return out;
  });
  pack.rules.push_back([](const Scenario&) {
    return std::vector<Constraint>{make_constraint(
        "ci_traffic_note", ConstraintOrigin::implicit, ConstraintKind::spatial,
        false, 1, "R6", {{"traffic", "not_modeled"}})};
  });
  return pack;
}

PlanningProblem builtin_thanksgiving_problem(bool augmented, bool delayed) {
  PlanningProblem p;
  p.facts = builtin_thanksgiving(augmented, delayed);

  p.objectives = {
      {"turkey", "cook", {"cooking"}, 240, p.facts.deadline, "home"},
      {"side_dishes", "cook", {"cooking"}, 120, p.facts.deadline, "home"},
      {"emily_pickup", "driver1", {"driving", "airport_pickup"}, 120,
       p.facts.deadline, ""},
      {"grandma_pickup", "driver2", {"driving"}, 60, p.facts.deadline, ""},
      {"oven_watch", "supervisor", {"supervision"}, 240, p.facts.deadline,
       "home"},
  };

  p.people = {
      {"sarah", {"cooking", "driving", "supervision"}, 600, kMinutesPerDay, "home"},
      {"james", {"driving", "airport_pickup"}, 780, kMinutesPerDay, ""},
      {"emily", {"cooking"}, 870, kMinutesPerDay, ""},
      {"michael", {"driving", "airport_pickup"}, 900, kMinutesPerDay, ""},
      {"grandma", {"cooking", "supervision"}, 600, kMinutesPerDay, "grandma"},
  };

  const auto O = ConstraintOrigin::explicit_stated;
  p.explicit_constraints = {
      make_constraint("ce_turkey_duration", O, ConstraintKind::temporal, true, 5,
                      "R1", {{"minutes", "240"}}),
      make_constraint("ce_sides_duration", O, ConstraintKind::temporal, true, 5,
                      "R3", {{"minutes", "120"}}),
      make_constraint("ce_oven_supervision", O, ConstraintKind::safety, true, 5,
                      "R2", {}, {"supervisor", "cook"}),
      make_constraint("ce_dinner_deadline", O, ConstraintKind::temporal, true, 5,
                      "R7", {{"deadline", "1080"}}),
      make_constraint("ce_airport_pickup", O, ConstraintKind::temporal, true, 5,
                      "R4", {{"passenger", "emily"}}, {"driver1", "cook"}),
      make_constraint("ce_travel_times", O, ConstraintKind::spatial, true, 5,
                      "R6", {{"route", "grandma-home"}}, {"driver2", "cook"}),
      make_constraint("ce_no_early_start", O, ConstraintKind::temporal, true, 5,
                      "R12", {{"start", std::to_string(p.facts.start_minute)}}),
  };

  if (augmented) p.knowledge_packs = {"airport", "household"};
  return p;
}

Workflow build_network(const PlanningProblem& problem) {
  Workflow w;
  for (const auto& task : problem.objectives) {
    if (task.capabilities.empty())
      throw std::invalid_argument("objective " + task.id +
                                  " has no capability tags");
    bool merged = false;
    for (auto& node : w.nodes)
      if (node.qualifications == task.capabilities) merged = true;
    if (!merged) {
      RoleNode n;
      n.id = task.role;
      n.role_name = task.role;
      n.qualifications = task.capabilities;
      w.add_node(n);
    }
  }

  for (const auto& c : problem.explicit_constraints) {
    w.constraints.add(c);
    if (c.relates.size() == 2 && w.find_node(c.relates[0]) &&
        w.find_node(c.relates[1])) {
      DependencyEdge e;
      e.id = "e_" + to_string(c.kind) + "_" + c.id;
      e.from_node = c.relates[0];
      e.to_node = c.relates[1];
      switch (c.kind) {
        case ConstraintKind::temporal: e.kind = EdgeKind::temporal; break;
        case ConstraintKind::spatial: e.kind = EdgeKind::spatial; break;
        case ConstraintKind::resource: e.kind = EdgeKind::resource; break;
        case ConstraintKind::safety: e.kind = EdgeKind::safety; break;
        default: e.kind = EdgeKind::data; break;
      }
      if (e.kind == EdgeKind::temporal) e.metadata["min_gap"] = "0";
      if (e.kind == EdgeKind::spatial) {
        auto it = c.params.find("route");
        e.metadata["route"] = it == c.params.end() ? "unspecified" : it->second;
      }
      w.add_edge(e);
    }
  }
  return w;
}

std::vector<Constraint> augment_constraints(const PlanningProblem& problem,
                                            const std::vector<std::string>& packs) {
  std::vector<Constraint> out;
  for (const auto& id : packs) {
    KnowledgePack pack;
    if (id == "airport")
      pack = airport_pack();
    else if (id == "household")
      pack = household_pack();
    else
      throw std::invalid_argument("unknown knowledge pack: " + id);
    for (const auto& rule : pack.rules)
      for (auto& c : rule(problem.facts)) out.push_back(std::move(c));
  }
  return out;
}

int apply_constraints(Workflow& w, const std::vector<Constraint>& batch) {
  int added = 0;
  for (const auto& c : batch) {
    if (w.constraints.contains(c.id)) continue;
    w.constraints.add(c);
    ++added;
  }
  return added;
}

double score(const Workflow& w, const Schedule& schedule, const MetricSet& metrics,
             const Scenario& facts) {
  auto report = check_schedule(facts, schedule);
  if (report.hard_count() > 0)
    return -std::numeric_limits<double>::infinity();

  auto violated = report.violated_rules();
  double satisfied = 0.0;
  for (const auto& c : w.constraints.items)
    if (!violated.count(c.rule)) satisfied += 1.0;
  double sat_frac = w.constraints.items.empty()
                        ? 1.0
                        : satisfied / static_cast<double>(w.constraints.items.size());

  auto sm = compute_metrics(facts, schedule, report);
  double horizon = static_cast<double>(metrics.horizon_minutes);
  double slack_frac = horizon > 0 ? sm.total_slack / horizon : 0.0;
  double idle_frac =
      facts.actors.empty() || horizon <= 0
          ? 0.0
          : sm.total_idle() / (horizon * static_cast<double>(facts.actors.size()));

  return metrics.w_satisfaction * sat_frac + metrics.w_slack * slack_frac -
         metrics.w_idle * idle_frac;
}

namespace {

struct Candidate {
  double value = -std::numeric_limits<double>::infinity();
  std::optional<Schedule> schedule;
};

Candidate evaluate(const PlanningProblem& problem, const Workflow& w,
                   const RoleMap& mapping) {
  Candidate c;
  c.schedule = greedy_schedule(problem.facts, mapping);
  if (c.schedule)
    c.value = score(w, *c.schedule, problem.metrics, problem.facts);
  return c;
}

}  // namespace

RefineResult refine(const PlanningProblem& problem, Workflow w,
                    const AgentRepository& repo, int max_iters) {
  (void)repo;  // agents monitor; they do not alter the search
  RefineResult result;

  RoleMap mapping;
  for (const auto& node : w.nodes) {
    const Person* chosen = nullptr;
    for (const auto& person : problem.people) {
      if (std::includes(person.qualifications.begin(), person.qualifications.end(),
                        node.qualifications.begin(), node.qualifications.end())) {
        chosen = &person;
        break;
      }
    }
    if (!chosen && !problem.people.empty()) chosen = &problem.people.front();
    if (chosen) mapping[node.role_name] = chosen->id;
  }

  Candidate best = evaluate(problem, w, mapping);
  if (best.schedule) result.value_history.push_back(best.value);

  for (int iter = 0; iter < max_iters; ++iter) {
    RoleMap best_neighbor;
    Candidate best_cand;
    for (const auto& node : w.nodes) {
      for (const auto& person : problem.people) {
        if (mapping[node.role_name] == person.id) continue;
        RoleMap neighbor = mapping;
        neighbor[node.role_name] = person.id;
        Candidate cand = evaluate(problem, w, neighbor);
        if (cand.value > best_cand.value) {
          best_cand = std::move(cand);
          best_neighbor = std::move(neighbor);
        }
      }
    }
    ++result.iterations;
    if (!best_cand.schedule || best_cand.value <= best.value) break;
    mapping = best_neighbor;
    best = std::move(best_cand);
    result.value_history.push_back(best.value);
  }

  if (!best.schedule)
    result.defects.push_back("no feasible role mapping found");

  for (auto& node : w.nodes) {
    auto it = mapping.find(node.role_name);
    if (it != mapping.end()) node.assigned_person = it->second;
  }
  w.score = best.schedule ? std::optional<double>(best.value) : std::nullopt;

  result.workflow = std::move(w);
  result.mapping = std::move(mapping);
  result.value = best.value;
  result.schedule = std::move(best.schedule);
  if (result.schedule)
    result.schedule_metrics = compute_metrics(problem.facts, *result.schedule);
  return result;
}

PlanResult plan(const PlanningProblem& problem) {
  PlanResult result;
  Workflow w = build_network(problem);
  apply_constraints(w, augment_constraints(problem, problem.knowledge_packs));

  AgentRepository repo;
  seed_common_agents(repo);
  result.node_agents = assign_node_agents(w, repo);
  result.edge_agents = assign_edge_agents(w, repo);
  for (auto& node : w.nodes) {
    auto it = result.node_agents.node_map.find(node.id);
    if (it != result.node_agents.node_map.end()) node.node_agent = it->second;
  }
  for (auto& edge : w.edges) {
    auto it = result.edge_agents.edge_map.find(edge.id);
    if (it != result.edge_agents.edge_map.end()) edge.edge_agent = it->second;
  }

  RefineResult refined = refine(problem, std::move(w), repo);
  result.workflow = std::move(refined.workflow);
  result.schedule = std::move(refined.schedule);
  result.schedule_metrics = refined.schedule_metrics;
  result.value = refined.value;
  result.iterations = refined.iterations;
  result.defects = std::move(refined.defects);
  for (const auto& d : result.node_agents.defects) result.defects.push_back(d);
  for (const auto& d : result.edge_agents.defects) result.defects.push_back(d);
  return result;
}

}  // namespace maci

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "maci/agents.hpp"
#include "maci/metrics.hpp"
#include "maci/scenario.hpp"
#include "maci/scheduler.hpp"
#include "maci/workflow.hpp"

namespace maci {

// One objective of a planning problem: a task some role must perform.
struct TaskDescriptor {
  std::string id;
  std::string role;                  // workflow role this task belongs to
  std::set<std::string> capabilities;  // required tags; must be non-empty
  Minute duration = 0;
  Minute deadline = kMinutesPerDay;
  std::string location;  // required location, "" = anywhere
};

struct Person {
  std::string id;
  std::set<std::string> qualifications;
  Minute available_from = 0;
  Minute available_to = kMinutesPerDay;
  std::string initial_location = "home";
};

// Deterministic stand-in for a common-sense analysis pass: each rule inspects
// the scenario facts and emits implicit constraints.
struct KnowledgePack {
  std::string id;
  using Rule = std::function<std::vector<Constraint>(const Scenario&)>;
  std::vector<Rule> rules;
};

KnowledgePack airport_pack();    // luggage-claim and car-rental process times
KnowledgePack household_pack();  // multitask allowance, preferences, traffic note

struct PlanningProblem {
  std::vector<TaskDescriptor> objectives;
  std::vector<Constraint> explicit_constraints;
  std::vector<Person> people;
  MetricSet metrics;
  std::vector<std::string> knowledge_packs;
  Scenario facts;  // concrete domain facts driving scheduling and checking
};

// The family dinner benchmark problem. augmented adds the airport/household
// knowledge packs (and the matching scenario rules); delayed moves the late
// flyer's landing to 16:00 with detection at 10:00.
PlanningProblem builtin_thanksgiving_problem(bool augmented, bool delayed);

// Phase 1: one role node per distinct capability signature among objectives;
// one typed edge per explicit constraint relating two roles; every explicit
// constraint copied in. Throws std::invalid_argument on an objective with no
// capability tags.
Workflow build_network(const PlanningProblem& problem);

// Emits the implicit constraints of the named packs against problem.facts.
// Throws std::invalid_argument on an unknown pack id.
std::vector<Constraint> augment_constraints(const PlanningProblem& problem,
                                            const std::vector<std::string>& packs);

// Adds constraints the workflow does not already contain (by id); returns the
// number actually added. Applying the same batch twice adds nothing.
int apply_constraints(Workflow& w, const std::vector<Constraint>& batch);

// Workflow value: V = w_sat * satisfied-constraint fraction
//                   + w_slack * slack / horizon
//                   - w_idle * idle / (horizon * actors),
// or -infinity when the schedule breaks any hard rule.
double score(const Workflow& w, const Schedule& schedule, const MetricSet& metrics,
             const Scenario& facts);

struct RefineResult {
  Workflow workflow;  // best mapping written into assigned_person
  RoleMap mapping;
  std::optional<Schedule> schedule;
  ScheduleMetrics schedule_metrics;
  double value = 0.0;
  int iterations = 0;
  std::vector<double> value_history;  // accepted V values, strictly increasing
  std::vector<std::string> defects;
};

// Phase 3: steepest-ascent hill climbing over role->person mappings. Proposes
// every single-reassignment neighbor (node order x person order), evaluates
// each from a clean state through the greedy scheduler, accepts only strict
// improvements, and stops after max_iters (default 100) or a local optimum.
RefineResult refine(const PlanningProblem& problem, Workflow w,
                    const AgentRepository& repo, int max_iters = 100);

struct PlanResult {
  Workflow workflow;
  std::optional<Schedule> schedule;
  ScheduleMetrics schedule_metrics;
  Assignment node_agents;
  Assignment edge_agents;
  double value = 0.0;
  int iterations = 0;
  std::vector<std::string> defects;
};

// End-to-end pipeline: build_network -> augment_constraints -> agent
// assignment -> refine -> final schedule and metrics.
PlanResult plan(const PlanningProblem& problem);

}  // namespace maci

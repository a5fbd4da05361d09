#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "maci/planner.hpp"
#include "maci/scenario.hpp"
#include "maci/workflow.hpp"

namespace maci {

// Execution-time world model: who is where, doing what until when, holding
// which resources, and why decisions were taken.
struct ActorState {
  std::string role;
  std::string location;
  std::set<std::string> resources_held;
  Minute busy_until = 0;

  bool operator==(const ActorState&) const = default;
};

struct WorldState {
  Minute clock = 0;
  std::map<std::string, ActorState> actors;
  std::vector<std::pair<Minute, std::string>> rationale_log;

  bool operator==(const WorldState&) const = default;
};

enum class ActionKind { travel, start_task, end_task, pickup, handoff };

std::string to_string(ActionKind a);

struct TransitionProposal {
  std::string actor;
  ActionKind action = ActionKind::travel;
  std::string destination;  // travel/pickup target; required task location
  std::string task;         // task or resource id
  std::string passenger;    // pickup rider / handoff receiver
  Minute start = 0;
  Minute end = 0;
};

struct TransitionReport {
  bool accepted = false;
  std::string failed_check;           // temporal|spatial|qualification|resource|safety
  std::vector<std::string> passed;    // checks that succeeded, in order
};

struct TransitionResult {
  WorldState state;  // updated on acceptance, bit-identical to input otherwise
  TransitionReport report;
};

// Pre-checks (temporal fit, spatial feasibility, driver qualification,
// resource availability), atomic apply, then the safety post-check: while
// anyone holds the "oven" resource, at least one actor must remain at home.
TransitionResult validate_transition(const WorldState& state,
                                     const TransitionProposal& proposal,
                                     const Scenario& facts);

struct RecoveryOption {
  TransitionProposal proposal;
  Minute delay = 0;
  std::vector<std::string> relaxed;  // soft rule codes given up

  int cost() const { return delay + 60 * static_cast<int>(relaxed.size()); }
};

// Alternatives for a rejected proposal: later starts in 15-minute steps up to
// the deadline, qualified substitute actors (tagging any soft preference the
// substitution abandons), ordered by cost = delay + 60 * relaxed-count.
std::vector<RecoveryOption> recover(const WorldState& state,
                                    const TransitionProposal& failed,
                                    const Scenario& facts);

struct DeviationThresholds {
  Minute buffer = 15;
  Minute tau = 30;
};

enum class Deviation { normal, warning, violation };

std::string to_string(Deviation d);

// |planned - actual| against the buffer/tau bands.
Deviation classify_deviation(Minute planned, Minute actual,
                             const DeviationThresholds& t = {});

// Sum of severity x urgency over affected elements.
int impact(const std::vector<std::pair<int, int>>& affected);

// Default (severity, urgency) per constraint kind.
std::pair<int, int> default_severity(ConstraintKind kind);

// Default affected set for an event kind; "flight_delay" touches the pickup
// chain (safety-graded driver disruption) and the dinner deadline.
std::vector<std::pair<int, int>> default_impact_pairs(const std::string& kind);

struct SolutionCandidate {
  double cost = 0.0;
  bool feasible = false;
  std::string label;
};

// Lowest-cost feasible candidate; ties keep input order; nullopt if none.
std::optional<SolutionCandidate> generate_solution(
    const std::vector<SolutionCandidate>& candidates);

struct UpdateDirective {
  std::map<std::string, std::string> reassignments;  // role -> person
  Minute temporal_shift = 0;  // added to every temporal edge's min_gap
};

// Pure workflow update; the input is left untouched and the result still
// validates structurally.
Workflow apply_update(const Workflow& current, const UpdateDirective& update);

// Simple temporal network: difference constraints t_to - t_from <= weight.
struct Stn {
  struct Edge {
    std::string from;
    std::string to;
    int weight = 0;
  };
  std::vector<std::string> points;
  std::vector<Edge> constraints;
};

// True iff no negative cycle (all-pairs shortest paths stay sane). Throws
// std::invalid_argument for an edge naming an unknown point.
bool stn_consistent(const Stn& stn);

// Difference-constraint view of a schedule: durations as lower bounds,
// per-actor sequencing, release at the planning start, deadline upper bounds.
Stn schedule_stn(const Scenario& facts, const Schedule& schedule);

struct DisruptionEvent {
  Minute detected_at = 0;
  std::string kind = "flight_delay";
  std::string actor;
  Minute old_time = 0;
  Minute new_time = 0;
};

struct Alert {
  DisruptionEvent event;
  int severity = 1;  // 1..5, graded by delay magnitude
  Minute delay = 0;
};

Alert early_alert(const DisruptionEvent& event);

struct DisruptionOutcome {
  PlanResult result;
  Alert alert;
  PlanningProblem updated_problem;  // input with the delay folded in
  std::vector<std::pair<Minute, std::string>> rationale;
};

// Fresh replan from the detection minute with the updated fact; a zero-minute
// delay reproduces the undisrupted plan exactly. Throws std::invalid_argument
// for unsupported event kinds or a new time before the old one.
DisruptionOutcome handle_disruption(const PlanningProblem& problem,
                                    const DisruptionEvent& event);

}  // namespace maci

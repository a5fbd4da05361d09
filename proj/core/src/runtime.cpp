#include "maci/runtime.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <stdexcept>

#include "maci/checker.hpp"
#include "maci/clock.hpp"

namespace maci {

std::string to_string(ActionKind a) {
  switch (a) {
    case ActionKind::travel: return "travel";
    case ActionKind::start_task: return "start_task";
    case ActionKind::end_task: return "end_task";
    case ActionKind::pickup: return "pickup";
    case ActionKind::handoff: return "handoff";
  }
  return "?";
}

std::string to_string(Deviation d) {
  switch (d) {
    case Deviation::normal: return "normal";
    case Deviation::warning: return "warning";
    case Deviation::violation: return "violation";
  }
  return "?";
}

namespace {

bool grants_oven(const std::string& task) {
  return task == "turkey" || task == "oven_watch";
}

bool someone_home(const WorldState& state) {
  for (const auto& [id, a] : state.actors)
    if (a.location == "home") return true;
  return false;
}

bool oven_held(const WorldState& state) {
  for (const auto& [id, a] : state.actors)
    if (a.resources_held.count("oven")) return true;
  return false;
}

}  // namespace

TransitionResult validate_transition(const WorldState& state,
                                     const TransitionProposal& p,
                                     const Scenario& facts) {
  TransitionResult res{state, {}};
  auto fail = [&](const std::string& check) {
    res.state = state;  // bit-identical on rejection
    res.report.accepted = false;
    res.report.failed_check = check;
    return res;
  };
  auto pass = [&](const std::string& check) { res.report.passed.push_back(check); };

  auto actor_it = state.actors.find(p.actor);
  if (actor_it == state.actors.end()) return fail("qualification");
  const ActorState& actor = actor_it->second;
  bool moves = p.action == ActionKind::travel || p.action == ActionKind::pickup;

  // Temporal fit: ordered window, actor free, matrix-true travel duration.
  if (p.end < p.start || p.start < state.clock || p.start < actor.busy_until)
    return fail("temporal");
  if (moves && !actor.location.empty() && facts.known_location(actor.location) &&
      facts.known_location(p.destination) && p.destination != actor.location &&
      p.end - p.start < facts.travel_minutes(actor.location, p.destination))
    return fail("temporal");
  pass("temporal");

  // Spatial feasibility.
  if (moves) {
    if (actor.location.empty() || !facts.known_location(actor.location) ||
        !facts.known_location(p.destination) || p.destination == actor.location)
      return fail("spatial");
  }
  if (p.action == ActionKind::start_task && !p.destination.empty() &&
      actor.location != p.destination)
    return fail("spatial");
  pass("spatial");

  // Role qualification: whoever moves a car must be able to drive.
  if (moves) {
    const auto* spec = facts.find_actor(p.actor);
    if (!spec || !spec->driver) return fail("qualification");
  }
  pass("qualification");

  // Resource availability: riders and handoff targets must be usable.
  const ActorState* passenger = nullptr;
  if (p.action == ActionKind::pickup || p.action == ActionKind::handoff) {
    auto it = state.actors.find(p.passenger);
    if (it == state.actors.end()) return fail("resource");
    passenger = &it->second;
    if (passenger->location != actor.location) return fail("resource");
    if (p.action == ActionKind::pickup && passenger->busy_until > p.start)
      return fail("resource");
    if (p.action == ActionKind::handoff && !actor.resources_held.count(p.task))
      return fail("resource");
  }
  if (p.action == ActionKind::end_task && grants_oven(p.task) &&
      !actor.resources_held.count("oven"))
    return fail("resource");
  pass("resource");

  // Atomic apply on the copy.
  WorldState& next = res.state;
  ActorState& self = next.actors[p.actor];
  switch (p.action) {
    case ActionKind::travel:
      self.location = p.destination;
      self.busy_until = p.end;
      break;
    case ActionKind::pickup: {
      self.location = p.destination;
      self.busy_until = p.end;
      ActorState& rider = next.actors[p.passenger];
      rider.location = p.destination;
      rider.busy_until = p.end;
      break;
    }
    case ActionKind::start_task:
      self.busy_until = p.end;
      if (grants_oven(p.task)) self.resources_held.insert("oven");
      if (p.task == "rental") self.resources_held.insert("car");
      break;
    case ActionKind::end_task:
      self.busy_until = p.start;
      if (grants_oven(p.task)) self.resources_held.erase("oven");
      break;
    case ActionKind::handoff:
      next.actors[p.actor].resources_held.erase(p.task);
      next.actors[p.passenger].resources_held.insert(p.task);
      break;
  }

  // Safety post-check: a lit oven is never left alone.
  if (oven_held(next) && !someone_home(next)) return fail("safety");
  pass("safety");

  next.rationale_log.push_back(
      {p.start, to_string(p.action) + " " + p.actor +
                    (p.destination.empty() ? "" : " -> " + p.destination) +
                    (p.task.empty() ? "" : " [" + p.task + "]") + " accepted"});
  res.report.accepted = true;
  return res;
}

std::vector<RecoveryOption> recover(const WorldState& state,
                                    const TransitionProposal& failed,
                                    const Scenario& facts) {
  std::vector<RecoveryOption> out;

  for (Minute d = 15;; d += 15) {
    TransitionProposal p = failed;
    p.start += d;
    p.end += d;
    if (p.end > facts.deadline) break;
    if (validate_transition(state, p, facts).report.accepted)
      out.push_back({p, d, {}});
  }

  for (const auto& [id, unused] : state.actors) {
    if (id == failed.actor) continue;
    TransitionProposal p = failed;
    p.actor = id;
    if (!validate_transition(state, p, facts).report.accepted) continue;
    std::vector<std::string> relaxed;
    for (const auto& pref : facts.soft_preferences) {
      auto pit = pref.params.find("passenger");
      auto dit = pref.params.find("preferred_driver");
      if (pit != pref.params.end() && dit != pref.params.end() &&
          pit->second == failed.passenger && dit->second != id)
        relaxed.push_back(pref.rule);
    }
    out.push_back({p, 0, relaxed});
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const RecoveryOption& a, const RecoveryOption& b) {
                     return a.cost() < b.cost();
                   });
  return out;
}

Deviation classify_deviation(Minute planned, Minute actual,
                             const DeviationThresholds& t) {
  Minute magnitude = std::abs(planned - actual);
  if (magnitude < t.buffer) return Deviation::normal;
  if (magnitude < t.tau) return Deviation::warning;
  return Deviation::violation;
}

int impact(const std::vector<std::pair<int, int>>& affected) {
  int total = 0;
  for (const auto& [severity, urgency] : affected) total += severity * urgency;
  return total;
}

std::pair<int, int> default_severity(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::safety: return {5, 5};
    case ConstraintKind::temporal: return {4, 3};
    case ConstraintKind::spatial: return {3, 3};
    case ConstraintKind::resource: return {3, 2};
    case ConstraintKind::preference: return {1, 1};
    case ConstraintKind::data: return {2, 2};
  }
  return {1, 1};
}

std::vector<std::pair<int, int>> default_impact_pairs(const std::string& kind) {
  if (kind == "flight_delay")
    return {default_severity(ConstraintKind::safety),
            default_severity(ConstraintKind::temporal)};
  return {};
}

std::optional<SolutionCandidate> generate_solution(
    const std::vector<SolutionCandidate>& candidates) {
  const SolutionCandidate* best = nullptr;
  for (const auto& c : candidates)
    if (c.feasible && (!best || c.cost < best->cost)) best = &c;
  if (!best) return std::nullopt;
  return *best;
}

Workflow apply_update(const Workflow& current, const UpdateDirective& update) {
  Workflow next = current;
  for (const auto& [role, person] : update.reassignments) {
    RoleNode* node = nullptr;
    for (auto& n : next.nodes)
      if (n.role_name == role) node = &n;
    if (!node) throw std::invalid_argument("reassignment for unknown role: " + role);
    node->assigned_person = person;
  }
  if (update.temporal_shift != 0) {
    for (auto& e : next.edges) {
      if (e.kind != EdgeKind::temporal) continue;
      int gap = std::stoi(e.metadata.at("min_gap"));
      e.metadata["min_gap"] = std::to_string(gap + update.temporal_shift);
    }
  }
  return next;
}

bool stn_consistent(const Stn& stn) {
  const int n = static_cast<int>(stn.points.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[stn.points[i]] = i;

  constexpr long kInf = LONG_MAX / 4;
  std::vector<std::vector<long>> dist(n, std::vector<long>(n, kInf));
  for (int i = 0; i < n; ++i) dist[i][i] = 0;
  for (const auto& e : stn.constraints) {
    auto f = index.find(e.from), t = index.find(e.to);
    if (f == index.end() || t == index.end())
      throw std::invalid_argument("constraint references unknown point");
    dist[f->second][t->second] =
        std::min(dist[f->second][t->second], static_cast<long>(e.weight));
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (dist[i][k] + dist[k][j] < dist[i][j])
          dist[i][j] = dist[i][k] + dist[k][j];
  for (int i = 0; i < n; ++i)
    if (dist[i][i] < 0) return false;
  return true;
}

Stn schedule_stn(const Scenario& facts, const Schedule& schedule) {
  Stn stn;
  stn.points.push_back("origin");  // represents the planning start minute

  std::vector<const ScheduleEntry*> occupying;
  for (const auto& e : schedule.entries)
    if (occupying_task(e.code())) occupying.push_back(&e);

  for (size_t i = 0; i < occupying.size(); ++i) {
    const auto& e = *occupying[i];
    std::string s = "s" + std::to_string(i), t = "e" + std::to_string(i);
    stn.points.push_back(s);
    stn.points.push_back(t);
    Minute required = e.end - e.start;
    if (e.code() == "travel")
      required = facts.travel_minutes(e.travel_from(), e.travel_to());
    stn.constraints.push_back({s, t, e.end - e.start});     // planned length
    stn.constraints.push_back({t, s, -required});           // true lower bound
    stn.constraints.push_back({"origin", s, e.start - facts.start_minute});
    stn.constraints.push_back({s, "origin", 0});            // release
    stn.constraints.push_back(
        {"origin", t, facts.deadline - facts.start_minute});  // deadline
    for (const auto& a : occupying[i]->assignees) {
      auto f = facts.flights.find(a);
      if (f != facts.flights.end() && f->second > facts.start_minute)
        stn.constraints.push_back(
            {s, "origin", -(f->second - facts.start_minute)});
    }
  }

  // Per-actor sequencing between consecutive occupying entries.
  for (const auto& actor : facts.actors) {
    int prev = -1;
    for (size_t i = 0; i < occupying.size(); ++i) {
      const auto& who = occupying[i]->assignees;
      if (std::find(who.begin(), who.end(), actor.id) == who.end()) continue;
      if (prev >= 0)
        stn.constraints.push_back(
            {"s" + std::to_string(i), "e" + std::to_string(prev), 0});
      prev = static_cast<int>(i);
    }
  }
  return stn;
}

Alert early_alert(const DisruptionEvent& event) {
  Alert alert;
  alert.event = event;
  alert.delay = event.new_time - event.old_time;
  if (alert.delay >= 120)
    alert.severity = 5;
  else if (alert.delay >= 60)
    alert.severity = 4;
  else if (alert.delay >= 30)
    alert.severity = 3;
  else if (alert.delay >= 15)
    alert.severity = 2;
  else
    alert.severity = 1;
  return alert;
}

DisruptionOutcome handle_disruption(const PlanningProblem& problem,
                                    const DisruptionEvent& event) {
  if (event.kind != "flight_delay")
    throw std::invalid_argument("unsupported disruption kind: " + event.kind);
  if (event.new_time < event.old_time)
    throw std::invalid_argument("a delay cannot move a flight earlier");

  PlanningProblem updated = problem;
  Minute delay = event.new_time - event.old_time;
  if (delay > 0) {
    if (!updated.facts.flights.count(event.actor))
      throw std::invalid_argument("no flight on record for " + event.actor);
    updated.facts.flights[event.actor] = event.new_time;
    updated.facts.delayed = true;
    updated.facts.start_minute = event.detected_at;
    for (auto& c : updated.explicit_constraints)
      if (c.rule == "R12") c.params["start"] = std::to_string(event.detected_at);
    for (auto& person : updated.people)
      if (person.id == event.actor) person.available_from = event.new_time;
  }

  DisruptionOutcome out;
  out.alert = early_alert(event);
  out.result = plan(updated);
  out.updated_problem = updated;
  out.rationale.push_back(
      {event.detected_at,
       "early alert: " + event.kind + " for " + event.actor + ", new time " +
           format_minute(event.new_time) + " (delay " + std::to_string(delay) +
           " min, severity " + std::to_string(out.alert.severity) + ")"});
  return out;
}

}  // namespace maci

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "maci/scenario.hpp"

namespace maci {

struct Violation {
  std::string rule;  // "R1".."R12"
  Minute window_start = 0;
  Minute window_end = 0;
  std::string description;
  bool hard = true;
};

struct ViolationReport {
  std::vector<Violation> items;

  bool feasible() const;  // true iff no hard violation
  int hard_count() const;
  std::set<std::string> violated_rules() const;
  std::set<std::string> violated_hard_rules() const;
};

// Piecewise-constant actor position; "" means off-site or in transit.
class LocationTimeline {
 public:
  struct Event {
    Minute minute;
    int phase;  // 0 arrival, 1 departure
    std::string location;
  };

  void set_initial(const std::string& loc) { initial_ = loc; }
  void add_arrival(Minute m, const std::string& loc);  // position from m on
  void add_departure(Minute m);                        // in transit from m on

  void finalize();  // sort events; arrivals outrank departures per minute

  // Position at minute m with every event at m applied.
  std::string at(Minute m) const;
  // Position at minute m with only arrivals at m applied — the view a
  // departure at m itself sees (arrive and leave in the same minute).
  std::string at_arrivals(Minute m) const;

  const std::vector<Event>& events() const { return events_; }
  const std::string& initial_location() const { return initial_; }

 private:
  std::string initial_;
  std::vector<Event> events_;
  bool finalized_ = false;
};

// Builds per-actor timelines from scenario facts (initial locations, flight
// landings, road ETAs) plus the schedule's travel/arrive entries. An explicit
// arrive entry replaces the actor's default road arrival.
std::map<std::string, LocationTimeline> build_timelines(const Scenario& s,
                                                        const Schedule& sched);

// Entries that occupy their assignees' time. Turkey is a point task (loading
// the oven); wait rows and the dinner marker occupy nobody.
bool occupying_task(const std::string& code);

// Evaluates the rule catalog:
//   R1  turkey cooks 240 min and finishes by the deadline
//   R2  someone is at home for every minute the turkey cooks
//   R3  side dishes take 120 min, finish by the deadline, cooked at home
//   R4  non-driving flyers are driven from the airport after luggage claim
//   R5  flyers who drive rent a car first (after 30-min luggage when augmented)
//   R6  travel uses matrix durations; locations stay continuous
//   R7  every actor is home at the dinner deadline
//   R8  non-drivers never drive
//   R9  no actor holds two occupying tasks at once
//   R10 (soft) the preferred driver handles the pickup
//   R11 (soft) the named cooks never cook simultaneously
//   R12 nothing is scheduled before the planning/detection start
// Throws std::invalid_argument on unknown task codes or locations.
ViolationReport check_schedule(const Scenario& s, const Schedule& sched);

// Rule-instance bookkeeping used by metrics and scoring.
struct RuleAccounting {
  std::set<std::string> applicable;
  std::set<std::string> satisfied;
  std::set<std::string> violated;
};
RuleAccounting rule_accounting(const Scenario& s, const ViolationReport& report);

}  // namespace maci

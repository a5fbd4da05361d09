#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "maci/clock.hpp"

namespace maci {

struct ScenarioActor {
  std::string id;
  bool driver = true;
  std::set<std::string> qualifications;
  std::string initial_location;  // empty = off-site until an arrival event
  Minute available_from = 0;     // earliest minute the actor can be tasked
};

// Exogenous arrival by road (flights live in Scenario::flights).
struct RoadArrival {
  std::string location;
  Minute minute = 0;
};

struct SoftPreference {
  std::string rule;  // "R10" or "R11"
  std::map<std::string, std::string> params;
  int priority = 1;
};

// Facts for one dinner-day planning instance. The augmented flag switches on
// the extra logistics rules (luggage/rental timing, cooking-overlap allowance,
// pickup preferences); the delayed flag marks a reactive re-planning run whose
// start_minute is the disruption detection time.
struct Scenario {
  std::vector<ScenarioActor> actors;
  std::vector<std::string> locations;
  std::map<std::string, std::map<std::string, Minute>> travel;  // minutes
  std::map<std::string, Minute> flights;        // actor -> landing minute
  std::map<std::string, RoadArrival> road_arrivals;
  std::set<std::string> rental_flyers;          // flyers who rent a car and drive
  Minute turkey_minutes = 240;
  Minute side_dish_minutes = 120;
  Minute deadline = 1080;
  Minute start_minute = 600;
  bool augmented = false;
  bool delayed = false;
  std::vector<SoftPreference> soft_preferences;

  const ScenarioActor* find_actor(const std::string& id) const;
  Minute travel_minutes(const std::string& from, const std::string& to) const;
  bool known_location(const std::string& loc) const;
  Minute luggage_minutes() const { return augmented ? 30 : 0; }
  Minute rental_minutes() const { return augmented ? 30 : 0; }
};

// One schedule row. Task codes:
//   turkey | side_dishes | luggage | rental | wait | home_task | dinner
//   travel:FROM:TO   (first assignee drives, the rest ride along)
//   arrive:LOC       (exogenous arrival override, e.g. rerouted road trip)
struct ScheduleEntry {
  Minute start = 0;
  Minute end = 0;
  std::string task;
  std::vector<std::string> assignees;

  std::string code() const;         // task up to the first ':'
  std::string travel_from() const;  // for travel entries
  std::string travel_to() const;
  std::string arrive_location() const;  // for arrive entries
};

struct Schedule {
  std::vector<ScheduleEntry> entries;
};

// The benchmark facts: Sarah home cooking; James lands 13:00 (16:00 when
// delayed, detected 10:00); Emily lands 14:30 and does not drive; Michael is
// on the road with ETA home 15:00; Grandma waits at her house; dinner 18:00.
Scenario builtin_thanksgiving(bool augmented, bool delayed);

// Builtin lookup by name ("thanksgiving", "thanksgiving-augmented",
// "thanksgiving-delayed", "thanksgiving-augmented-delayed").
std::optional<Scenario> builtin_scenario(const std::string& name);

// CSV with columns start,end,task,assignees (assignees ';'-separated; times
// "H:MM" or raw minutes; a header row is skipped if present).
Schedule load_schedule_csv(const std::string& path);
Schedule parse_schedule_csv(const std::string& text);
std::string schedule_to_csv(const Schedule& s);

}  // namespace maci

#include "maci/checker.hpp"

#include <algorithm>
#include <stdexcept>

namespace maci {

bool ViolationReport::feasible() const { return hard_count() == 0; }

int ViolationReport::hard_count() const {
  int n = 0;
  for (const auto& v : items)
    if (v.hard) ++n;
  return n;
}

std::set<std::string> ViolationReport::violated_rules() const {
  std::set<std::string> out;
  for (const auto& v : items) out.insert(v.rule);
  return out;
}

std::set<std::string> ViolationReport::violated_hard_rules() const {
  std::set<std::string> out;
  for (const auto& v : items)
    if (v.hard) out.insert(v.rule);
  return out;
}

void LocationTimeline::add_arrival(Minute m, const std::string& loc) {
  events_.push_back({m, 0, loc});
  finalized_ = false;
}

void LocationTimeline::add_departure(Minute m) {
  events_.push_back({m, 1, ""});
  finalized_ = false;
}

void LocationTimeline::finalize() {
  std::stable_sort(events_.begin(), events_.end(), [](const Event& a, const Event& b) {
    if (a.minute != b.minute) return a.minute < b.minute;
    return a.phase < b.phase;
  });
  finalized_ = true;
}

std::string LocationTimeline::at(Minute m) const {
  std::string loc = initial_;
  for (const auto& e : events_) {
    if (e.minute > m) break;
    loc = e.location;
  }
  return loc;
}

std::string LocationTimeline::at_arrivals(Minute m) const {
  std::string loc = initial_;
  for (const auto& e : events_) {
    if (e.minute > m || (e.minute == m && e.phase == 1)) break;
    loc = e.location;
  }
  return loc;
}

bool occupying_task(const std::string& code) {
  return code == "travel" || code == "arrive" || code == "side_dishes" ||
         code == "luggage" || code == "rental" || code == "home_task";
}

namespace {

const std::set<std::string> kKnownCodes = {
    "turkey", "side_dishes", "luggage", "rental", "wait",
    "home_task", "dinner", "travel", "arrive"};

bool has_assignee(const ScheduleEntry& e, const std::string& actor) {
  return std::find(e.assignees.begin(), e.assignees.end(), actor) !=
         e.assignees.end();
}

}  // namespace

std::map<std::string, LocationTimeline> build_timelines(const Scenario& s,
                                                        const Schedule& sched) {
  std::map<std::string, LocationTimeline> tl;
  std::set<std::string> overridden;  // actors with explicit arrive entries
  for (const auto& e : sched.entries)
    if (e.code() == "arrive")
      for (const auto& a : e.assignees) overridden.insert(a);

  for (const auto& actor : s.actors) {
    LocationTimeline& t = tl[actor.id];
    t.set_initial(actor.initial_location);
    auto f = s.flights.find(actor.id);
    if (f != s.flights.end()) t.add_arrival(f->second, "airport");
    auto r = s.road_arrivals.find(actor.id);
    if (r != s.road_arrivals.end() && !overridden.count(actor.id))
      t.add_arrival(r->second.minute, r->second.location);
  }

  for (const auto& e : sched.entries) {
    const auto code = e.code();
    if (code == "travel") {
      for (const auto& a : e.assignees) {
        auto it = tl.find(a);
        if (it == tl.end()) continue;
        it->second.add_departure(e.start);
        it->second.add_arrival(e.end, e.travel_to());
      }
    } else if (code == "arrive") {
      for (const auto& a : e.assignees) {
        auto it = tl.find(a);
        if (it == tl.end()) continue;
        it->second.add_departure(e.start);
        it->second.add_arrival(e.end, e.arrive_location());
      }
    }
  }
  for (auto& [id, t] : tl) t.finalize();
  return tl;
}

namespace {

struct Checker {
  const Scenario& s;
  const Schedule& sched;
  std::map<std::string, LocationTimeline> tl;
  ViolationReport report;

  Checker(const Scenario& sc, const Schedule& sh) : s(sc), sched(sh) {}

  void add(const std::string& rule, Minute ws, Minute we, const std::string& desc,
           bool hard = true) {
    report.items.push_back({rule, ws, we, desc, hard});
  }

  int home_count(Minute m) const {
    int n = 0;
    for (const auto& a : s.actors)
      if (tl.at(a.id).at(m) == "home") ++n;
    return n;
  }

  // Earliest minute the actor can appear in an occupying entry.
  Minute presence_start(const std::string& actor) const {
    auto f = s.flights.find(actor);
    if (f != s.flights.end()) return f->second;
    for (const auto& e : sched.entries)
      if (e.code() == "arrive" && has_assignee(e, actor)) return e.end;
    auto r = s.road_arrivals.find(actor);
    if (r != s.road_arrivals.end()) return r->second.minute;
    return 0;  // on-site from the start of day
  }

  std::vector<const ScheduleEntry*> entries_with_code(const std::string& code) const {
    std::vector<const ScheduleEntry*> out;
    for (const auto& e : sched.entries)
      if (e.code() == code) out.push_back(&e);
    return out;
  }

  void validate_entries() const {
    for (const auto& e : sched.entries) {
      if (!kKnownCodes.count(e.code()))
        throw std::invalid_argument("unknown task code: " + e.task);
      if (e.code() == "travel") {
        if (!s.known_location(e.travel_from()))
          throw std::invalid_argument("unknown location: " + e.travel_from());
        if (!s.known_location(e.travel_to()))
          throw std::invalid_argument("unknown location: " + e.travel_to());
      }
      if (e.code() == "arrive" && !s.known_location(e.arrive_location()))
        throw std::invalid_argument("unknown location: " + e.arrive_location());
      if (e.start < 0 || e.end > kMinutesPerDay)
        throw std::invalid_argument("entry outside the day: " + e.task);
    }
  }

  // R1 + R2: turkey duration/deadline and continuous house occupancy.
  void check_turkey() {
    auto turkeys = entries_with_code("turkey");
    if (turkeys.empty()) {
      add("R1", s.deadline, s.deadline, "no turkey cooking scheduled");
      return;
    }
    for (const auto* e : turkeys) {
      Minute cook_end = std::max(e->end, e->start + s.turkey_minutes);
      if (cook_end > s.deadline)
        add("R1", e->start, cook_end,
            "turkey in the oven at " + format_minute(e->start) + " finishes " +
                format_minute(cook_end) + ", after the " +
                format_minute(s.deadline) + " deadline");
      Minute ws = e->start, we = std::min(cook_end, s.deadline);
      Minute gap_start = -1;
      for (Minute m = ws; m <= we; ++m) {
        bool empty = m < we && home_count(m) == 0;
        if (empty && gap_start < 0) gap_start = m;
        if (!empty && gap_start >= 0) {
          add("R2", gap_start, m,
              "house empty " + format_window(gap_start, m) + " while the turkey cooks");
          gap_start = -1;
        }
      }
    }
  }

  void check_side_dishes() {
    auto sides = entries_with_code("side_dishes");
    if (sides.empty()) {
      add("R3", s.deadline, s.deadline, "no side dishes scheduled");
      return;
    }
    for (const auto* e : sides) {
      if (e->end - e->start < s.side_dish_minutes)
        add("R3", e->start, e->end,
            "side dishes need " + std::to_string(s.side_dish_minutes) +
                " minutes, scheduled " + std::to_string(e->end - e->start));
      if (e->end > s.deadline)
        add("R3", e->start, e->end, "side dishes finish after the deadline");
      if (e->assignees.empty())
        add("R3", e->start, e->end, "side dishes have no cook assigned");
      for (const auto& a : e->assignees) {
        for (Minute m = e->start; m < e->end; ++m) {
          if (tl.at(a).at(m) != "home") {
            add("R3", e->start, e->end,
                a + " is away from home while preparing side dishes");
            break;
          }
        }
      }
    }
  }

  void check_pickups() {  // R4
    for (const auto& actor : s.actors) {
      if (actor.driver) continue;
      auto f = s.flights.find(actor.id);
      if (f == s.flights.end()) continue;
      Minute ready = f->second + s.luggage_minutes();
      const ScheduleEntry* pickup = nullptr;
      for (const auto& e : sched.entries)
        if (e.code() == "travel" && e.travel_from() == "airport" &&
            has_assignee(e, actor.id) && (!pickup || e.start < pickup->start))
          pickup = &e;
      if (!pickup) {
        add("R4", f->second, s.deadline,
            actor.id + " is never driven home from the airport");
        continue;
      }
      if (pickup->start < ready)
        add("R4", pickup->start, ready,
            actor.id + " picked up at " + format_minute(pickup->start) +
                " but not ready until " + format_minute(ready));
    }
  }

  void check_rental() {  // R5
    for (const auto& flyer : s.rental_flyers) {
      auto f = s.flights.find(flyer);
      if (f == s.flights.end()) continue;
      const ScheduleEntry* first_drive = nullptr;
      for (const auto& e : sched.entries)
        if (e.code() == "travel" && !e.assignees.empty() && e.assignees[0] == flyer &&
            (!first_drive || e.start < first_drive->start))
          first_drive = &e;
      if (!first_drive) continue;  // never drives, no rental needed

      const ScheduleEntry* rental = nullptr;
      for (const auto& e : sched.entries)
        if (e.code() == "rental" && has_assignee(e, flyer) &&
            (!rental || e.start < rental->start))
          rental = &e;
      if (!rental) {
        // With an instantaneous rental process the entry may be elided.
        if (s.rental_minutes() > 0)
          add("R5", first_drive->start, first_drive->end,
              flyer + " drives without renting a car");
        continue;
      }
      Minute luggage_done = f->second + s.luggage_minutes();
      if (rental->start < luggage_done)
        add("R5", rental->start, luggage_done,
            flyer + " rents at " + format_minute(rental->start) +
                " before claiming luggage (done " + format_minute(luggage_done) + ")");
      if (rental->end - rental->start < s.rental_minutes())
        add("R5", rental->start, rental->end,
            "car rental takes " + std::to_string(s.rental_minutes()) +
                " minutes, scheduled " + std::to_string(rental->end - rental->start));
      if (first_drive->start < rental->end)
        add("R5", first_drive->start, rental->end,
            flyer + " drives at " + format_minute(first_drive->start) +
                " before the rental completes at " + format_minute(rental->end));
    }
  }

  void check_locations() {  // R6
    for (const auto& e : sched.entries) {
      const auto code = e.code();
      if (code == "travel") {
        Minute need = s.travel_minutes(e.travel_from(), e.travel_to());
        if (e.end - e.start < need)
          add("R6", e.start, e.end,
              "travel " + e.travel_from() + "->" + e.travel_to() + " takes " +
                  std::to_string(need) + " minutes, scheduled " +
                  std::to_string(e.end - e.start));
        for (const auto& a : e.assignees) {
          if (!s.find_actor(a)) continue;
          auto loc = tl.at(a).at_arrivals(e.start);
          if (loc != e.travel_from())
            add("R6", e.start, e.end,
                a + " departs " + e.travel_from() + " but is " +
                    (loc.empty() ? "in transit" : "at " + loc));
        }
      } else if (code == "turkey") {
        for (const auto& a : e.assignees)
          if (s.find_actor(a) && tl.at(a).at_arrivals(e.start) != "home")
            add("R6", e.start, e.start,
                a + " loads the oven but is not at home at " + format_minute(e.start));
      } else if (code == "luggage" || code == "rental") {
        for (const auto& a : e.assignees)
          if (s.find_actor(a) && tl.at(a).at_arrivals(e.start) != "airport")
            add("R6", e.start, e.end, a + " must be at the airport for " + code);
      } else if (code == "home_task") {
        for (const auto& a : e.assignees)
          if (s.find_actor(a) && tl.at(a).at_arrivals(e.start) != "home")
            add("R6", e.start, e.end, a + " is away from home for " + e.task);
      }
      // presence: nobody acts before they are on site
      if (occupying_task(code) && code != "arrive") {
        for (const auto& a : e.assignees) {
          if (!s.find_actor(a)) continue;
          Minute avail = presence_start(a);
          if (e.start < avail)
            add("R6", e.start, avail,
                a + " is scheduled at " + format_minute(e.start) +
                    " but only arrives at " + format_minute(avail));
        }
      }
    }
  }

  void check_dinner() {  // R7
    std::vector<std::string> away;
    for (const auto& a : s.actors)
      if (tl.at(a.id).at(s.deadline) != "home") away.push_back(a.id);
    if (!away.empty()) {
      std::string who;
      for (size_t i = 0; i < away.size(); ++i) who += (i ? ", " : "") + away[i];
      add("R7", s.deadline, s.deadline, "not home for dinner: " + who);
    }
  }

  void check_drivers() {  // R8
    for (const auto& e : sched.entries) {
      if (e.code() != "travel") continue;
      if (e.assignees.empty()) {
        add("R8", e.start, e.end, "travel entry with nobody driving");
        continue;
      }
      const auto* driver = s.find_actor(e.assignees[0]);
      if (driver && !driver->driver)
        add("R8", e.start, e.end, driver->id + " cannot drive");
    }
  }

  void check_overlap() {  // R9
    for (const auto& actor : s.actors) {
      std::vector<const ScheduleEntry*> busy;
      for (const auto& e : sched.entries)
        if (occupying_task(e.code()) && has_assignee(e, actor.id))
          busy.push_back(&e);
      std::sort(busy.begin(), busy.end(),
                [](const ScheduleEntry* a, const ScheduleEntry* b) {
                  return a->start < b->start;
                });
      for (size_t i = 1; i < busy.size(); ++i) {
        Minute prev_end = busy[i - 1]->end;
        if (busy[i]->start < prev_end)
          add("R9", busy[i]->start, std::min(prev_end, busy[i]->end),
              actor.id + " double-booked: " + busy[i - 1]->task + " and " +
                  busy[i]->task);
      }
    }
  }

  void check_preferences() {  // R10, R11 (soft)
    for (const auto& pref : s.soft_preferences) {
      if (pref.rule == "R10") {
        const auto& passenger = pref.params.at("passenger");
        const auto& preferred = pref.params.at("preferred_driver");
        const ScheduleEntry* ride = nullptr;
        for (const auto& e : sched.entries)
          if (e.code() == "travel" && has_assignee(e, passenger) &&
              !e.assignees.empty() && e.assignees[0] != passenger)
            ride = &e;  // last ride wins: the delivery leg
        if (!ride || ride->assignees[0] != preferred)
          add("R10", s.start_minute, s.deadline,
              passenger + " prefers " + preferred + " to drive", false);
      } else if (pref.rule == "R11") {
        const auto& a = pref.params.at("cook_a");
        const auto& b = pref.params.at("cook_b");
        auto sides = entries_with_code("side_dishes");
        for (size_t i = 0; i < sides.size(); ++i) {
          if (has_assignee(*sides[i], a) && has_assignee(*sides[i], b))
            add("R11", sides[i]->start, sides[i]->end,
                a + " and " + b + " cooking together", false);
          for (size_t j = i + 1; j < sides.size(); ++j) {
            bool pair = (has_assignee(*sides[i], a) && has_assignee(*sides[j], b)) ||
                        (has_assignee(*sides[i], b) && has_assignee(*sides[j], a));
            if (pair && sides[i]->end > sides[j]->start &&
                sides[j]->end > sides[i]->start)
              add("R11", std::max(sides[i]->start, sides[j]->start),
                  std::min(sides[i]->end, sides[j]->end),
                  a + " and " + b + " cooking simultaneously", false);
          }
        }
      }
    }
  }

  void check_start() {  // R12
    for (const auto& e : sched.entries)
      if (e.start < s.start_minute)
        add("R12", e.start, s.start_minute,
            e.task + " scheduled at " + format_minute(e.start) +
                ", before planning starts at " + format_minute(s.start_minute));
  }

  ViolationReport run() {
    validate_entries();
    if (s.actors.empty()) return report;  // no household, nothing to enforce
    tl = build_timelines(s, sched);
    check_turkey();
    check_side_dishes();
    check_pickups();
    check_rental();
    check_locations();
    check_dinner();
    check_drivers();
    check_overlap();
    check_preferences();
    check_start();
    return report;
  }
};

}  // namespace

ViolationReport check_schedule(const Scenario& s, const Schedule& sched) {
  return Checker(s, sched).run();
}

RuleAccounting rule_accounting(const Scenario& s, const ViolationReport& report) {
  RuleAccounting acc;
  acc.applicable = {"R1", "R2", "R3", "R6", "R7", "R8", "R9", "R12"};
  for (const auto& a : s.actors)
    if (!a.driver && s.flights.count(a.id)) acc.applicable.insert("R4");
  if (!s.rental_flyers.empty()) acc.applicable.insert("R5");
  for (const auto& p : s.soft_preferences) acc.applicable.insert(p.rule);

  auto violated = report.violated_rules();
  for (const auto& rule : acc.applicable) {
    if (violated.count(rule))
      acc.violated.insert(rule);
    else
      acc.satisfied.insert(rule);
  }
  return acc;
}

}  // namespace maci

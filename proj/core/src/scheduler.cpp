#include "maci/scheduler.hpp"

#include <algorithm>
#include <vector>

#include "maci/checker.hpp"

namespace maci {
namespace {

struct PickupJob {
  std::string passenger;
  std::string from;   // where the passenger waits
  Minute ready;       // earliest minute the passenger can leave
  std::string role;   // driver role responsible
};

struct Dispatcher {
  const Scenario& s;
  const RoleMap& roles;
  Schedule sched;
  std::map<std::string, Minute> free_at;
  std::map<std::string, std::string> loc;

  const std::string* person_for(const std::string& role) const {
    auto it = roles.find(role);
    if (it == roles.end()) return nullptr;
    return s.find_actor(it->second) ? &it->second : nullptr;
  }

  void emit(Minute start, Minute end, const std::string& task,
            std::vector<std::string> who) {
    sched.entries.push_back({start, end, task, std::move(who)});
  }

  bool drive(const std::string& driver, const std::string& dest, Minute depart,
             std::vector<std::string> passengers) {
    Minute minutes = s.travel_minutes(loc[driver], dest);
    std::vector<std::string> who = {driver};
    for (auto& p : passengers) who.push_back(p);
    emit(depart, depart + minutes, "travel:" + loc[driver] + ":" + dest, who);
    for (const auto& a : who) {
      loc[a] = dest;
      free_at[a] = depart + minutes;
    }
    return true;
  }

  std::optional<Schedule> run() {
    if (s.actors.empty()) return Schedule{};

    for (const auto& a : s.actors) {
      Minute avail = std::max(s.start_minute, a.available_from);
      std::string at = a.initial_location;
      if (auto f = s.flights.find(a.id); f != s.flights.end()) {
        avail = std::max(avail, f->second);
        at = "airport";
      } else if (auto r = s.road_arrivals.find(a.id); r != s.road_arrivals.end()) {
        avail = std::max(avail, r->second.minute);
        at = r->second.location;
      }
      free_at[a.id] = avail;
      loc[a.id] = at;
    }

    const std::string* cook = person_for("cook");
    if (!cook) return std::nullopt;

    // Meal anchors: latest start that still meets the deadline, keeping the
    // cook home for the whole cooking window.
    Minute turkey_load = s.deadline - s.turkey_minutes;
    emit(turkey_load, s.deadline, "turkey", {*cook});
    Minute sides_start = s.deadline - s.side_dish_minutes;
    emit(sides_start, s.deadline, "side_dishes", {*cook});

    // Flyers who rent a car serve themselves: luggage, rental, then they
    // either drive straight home or double as a pickup driver below.
    for (const auto& flyer : s.rental_flyers) {
      auto f = s.flights.find(flyer);
      if (f == s.flights.end() || !s.find_actor(flyer)) continue;
      Minute t = f->second;
      if (s.luggage_minutes() > 0) {
        emit(t, t + s.luggage_minutes(), "luggage", {flyer});
        t += s.luggage_minutes();
      }
      if (s.rental_minutes() > 0) {
        emit(t, t + s.rental_minutes(), "rental", {flyer});
        t += s.rental_minutes();
      }
      free_at[flyer] = std::max(free_at[flyer], t);
    }

    // Pickup jobs, dispatched in passenger-readiness order.
    std::vector<PickupJob> jobs;
    for (const auto& a : s.actors) {
      if (s.rental_flyers.count(a.id)) continue;  // already handled above
      if (auto f = s.flights.find(a.id); f != s.flights.end()) {
        if (s.luggage_minutes() > 0)
          emit(f->second, f->second + s.luggage_minutes(), "luggage", {a.id});
        if (!a.driver)
          jobs.push_back({a.id, "airport", f->second + s.luggage_minutes(),
                          "driver1"});
      } else if (!a.initial_location.empty() && a.initial_location != "home") {
        jobs.push_back({a.id, a.initial_location,
                        std::max(s.start_minute, a.available_from), "driver2"});
      }
    }
    std::sort(jobs.begin(), jobs.end(), [](const PickupJob& a, const PickupJob& b) {
      if (a.ready != b.ready) return a.ready < b.ready;
      return a.passenger < b.passenger;
    });

    for (const auto& job : jobs) {
      const std::string* d = person_for(job.role);
      if (!d) return std::nullopt;
      const auto* spec = s.find_actor(*d);
      if (!spec || !spec->driver) return std::nullopt;  // non-driver mapping
      if (loc[*d] != job.from) {
        // Head out no earlier than needed: arriving before the passenger is
        // ready only drains the house.
        Minute out = s.travel_minutes(loc[*d], job.from);
        Minute depart = std::max(free_at[*d], job.ready - out);
        drive(*d, job.from, depart, {});
      }
      Minute back = std::max(free_at[*d], job.ready);
      drive(*d, "home", back, {job.passenger});
    }

    // Remaining self-served flyers drive themselves home.
    for (const auto& flyer : s.rental_flyers) {
      if (!s.find_actor(flyer) || !s.flights.count(flyer)) continue;
      if (loc[flyer] != "home") drive(flyer, "home", free_at[flyer], {});
    }

    std::vector<std::string> everyone;
    for (const auto& a : s.actors) everyone.push_back(a.id);
    emit(s.deadline, s.deadline, "dinner", everyone);

    std::stable_sort(sched.entries.begin(), sched.entries.end(),
                     [](const ScheduleEntry& a, const ScheduleEntry& b) {
                       if (a.start != b.start) return a.start < b.start;
                       if (a.end != b.end) return a.end < b.end;
                       return a.task < b.task;
                     });

    if (!check_schedule(s, sched).feasible()) return std::nullopt;
    return sched;
  }
};

}  // namespace

std::optional<Schedule> greedy_schedule(const Scenario& scenario,
                                        const RoleMap& roles) {
  return Dispatcher{scenario, roles}.run();
}

}  // namespace maci

#include "maci/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace maci {

Minute ScheduleMetrics::total_idle() const {
  Minute total = 0;
  for (const auto& [actor, minutes] : idle) total += minutes;
  return total;
}

namespace {

Minute slack_minutes(const Scenario& s, const Schedule& sched) {
  Minute slack = 0;
  for (const auto& e : sched.entries) {
    if (e.code() == "turkey") {
      Minute cook_end = std::max(e.end, e.start + s.turkey_minutes);
      slack += std::max(0, s.deadline - cook_end);
    } else if (e.code() == "side_dishes") {
      slack += std::max(0, s.deadline - e.end);
    }
  }
  auto timelines = build_timelines(s, sched);
  for (const auto& actor : s.actors) {
    const auto& tl = timelines.at(actor.id);
    Minute last_home = -1;
    bool was_away = false;
    for (const auto& ev : tl.events()) {
      if (ev.phase == 0 && ev.location == "home")
        last_home = ev.minute;
      else
        was_away = true;
    }
    if (actor.initial_location != "home") was_away = true;
    if (was_away && last_home >= 0) slack += std::max(0, s.deadline - last_home);
  }
  return slack;
}

std::map<std::string, Minute> idle_minutes(const Scenario& s, const Schedule& sched) {
  std::map<std::string, Minute> idle;
  for (const auto& actor : s.actors) {
    // Merge the actor's occupying intervals.
    std::vector<std::pair<Minute, Minute>> busy;
    Minute first = -1, last = -1;
    for (const auto& e : sched.entries) {
      if (std::find(e.assignees.begin(), e.assignees.end(), actor.id) ==
          e.assignees.end())
        continue;
      if (first < 0 || e.start < first) first = e.start;
      last = std::max(last, e.end);
      if (occupying_task(e.code())) busy.push_back({e.start, e.end});
    }
    Minute window_start, window_end;
    if (s.delayed) {
      window_start = s.start_minute;
      window_end = s.deadline;
    } else if (first < 0) {
      idle[actor.id] = 0;
      continue;
    } else {
      window_start = first;
      window_end = last;
    }
    std::sort(busy.begin(), busy.end());
    Minute occupied = 0, cursor = window_start;
    for (const auto& [b, e] : busy) {
      Minute lo = std::max(b, cursor), hi = std::min(e, window_end);
      if (hi > lo) {
        occupied += hi - lo;
        cursor = hi;
      }
    }
    idle[actor.id] = std::max(0, window_end - window_start - occupied);
  }
  return idle;
}

}  // namespace

ScheduleMetrics compute_metrics(const Scenario& scenario, const Schedule& schedule) {
  return compute_metrics(scenario, schedule, check_schedule(scenario, schedule));
}

ScheduleMetrics compute_metrics(const Scenario& scenario, const Schedule& schedule,
                                const ViolationReport& report) {
  ScheduleMetrics m;
  auto acc = rule_accounting(scenario, report);
  m.satisfaction_pct =
      acc.applicable.empty()
          ? 100.0
          : 100.0 * static_cast<double>(acc.satisfied.size()) /
                static_cast<double>(acc.applicable.size());
  m.total_slack = slack_minutes(scenario, schedule);
  m.idle = idle_minutes(scenario, schedule);
  if (!schedule.entries.empty()) {
    Minute lo = schedule.entries.front().start, hi = schedule.entries.front().end;
    for (const auto& e : schedule.entries) {
      lo = std::min(lo, e.start);
      hi = std::max(hi, e.end);
    }
    m.makespan = hi - lo;
  }
  return m;
}

double ipc_score(const std::vector<std::pair<double, double>>& pairs) {
  double score = 0.0;
  for (const auto& [best, achieved] : pairs) {
    if (!(best > 0.0) || achieved < best)
      throw std::invalid_argument("ipc_score requires achieved >= best > 0");
    score += best / achieved;
  }
  return score;
}

}  // namespace maci

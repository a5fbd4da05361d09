#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "maci/checker.hpp"
#include "maci/scenario.hpp"

namespace maci {

// Quality measures for a concrete schedule.
//
// satisfaction_pct: satisfied applicable rules / applicable rules, in percent.
// total_slack: minutes of headroom summed over every deadline-bound
//   completion — the turkey finish, each side-dish finish, and each actor's
//   final arrival home (actors who never leave home contribute nothing).
// idle: unoccupied minutes per actor.  For delayed (reactive) scenarios the
//   accounting window is fixed at detection-to-dinner for everyone; otherwise
//   it spans the actor's first to last scheduled activity.
// makespan: span from the first entry start to the last entry end.
struct ScheduleMetrics {
  double satisfaction_pct = 100.0;
  Minute total_slack = 0;
  std::map<std::string, Minute> idle;
  Minute makespan = 0;

  Minute total_idle() const;
};

ScheduleMetrics compute_metrics(const Scenario& scenario, const Schedule& schedule);
ScheduleMetrics compute_metrics(const Scenario& scenario, const Schedule& schedule,
                                const ViolationReport& report);

// Aggregate plan-quality ratio over (best_known, achieved) makespan pairs:
// sum of best/achieved.  Empty input scores 0.  Each pair must satisfy
// achieved >= best > 0.
double ipc_score(const std::vector<std::pair<double, double>>& pairs);

}  // namespace maci

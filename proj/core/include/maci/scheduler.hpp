#pragma once

#include <map>
#include <optional>
#include <string>

#include "maci/scenario.hpp"

namespace maci {

// Role keys the scheduler understands. "cook" prepares the turkey and side
// dishes, "driver1" collects arriving flyers who cannot drive, "driver2"
// fetches the off-site guest, "supervisor" names the person accountable for
// the oven (enforced structurally through house occupancy, never scheduled).
using RoleMap = std::map<std::string, std::string>;

// Deterministic earliest-feasible dispatcher. Anchors the turkey and side
// dishes against the dinner deadline, self-serves flyers who rent a car
// (luggage, rental, drive home), then dispatches pickups at the earliest
// minute the mapped driver is free and the passenger is ready. The result is
// gated through the rule checker: any hard violation yields nullopt rather
// than a violating schedule. An empty scenario yields an empty schedule.
std::optional<Schedule> greedy_schedule(const Scenario& scenario,
                                        const RoleMap& roles);

}  // namespace maci

#pragma once

#include <string>
#include <vector>

#include "maci/agents.hpp"
#include "maci/checker.hpp"
#include "maci/metrics.hpp"
#include "maci/planner.hpp"
#include "maci/runtime.hpp"
#include "maci/scenario.hpp"
#include "maci/workflow.hpp"

// JSON round-trips for the file formats the CLI and service exchange.
// Malformed input throws std::invalid_argument with a reason; times may be
// given as minute numbers or "H:MM" strings and are always written as
// minutes.

namespace maci {

std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& text);

std::string workflow_to_json(const Workflow& w);
Workflow workflow_from_json(const std::string& text);

std::string schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const std::string& text);

std::string events_to_json(const std::vector<DisruptionEvent>& events);
std::vector<DisruptionEvent> events_from_json(const std::string& text);

std::string agents_to_json(const std::vector<AgentSpec>& agents);
std::vector<AgentSpec> agents_from_json(const std::string& text);

std::string report_to_json(const ViolationReport& report);
std::string metrics_to_json(const ScheduleMetrics& metrics);
std::string plan_result_to_json(const PlanResult& result);

// Whole-file helpers; throw std::runtime_error with the path on IO failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace maci

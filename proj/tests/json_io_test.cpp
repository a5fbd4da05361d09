// JSON import/export: byte-stable round trips, lenient time formats,
// defect reporting, and the one-way report/metrics/plan exporters.
#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "maci/agents.hpp"
#include "maci/checker.hpp"
#include "maci/json_io.hpp"
#include "maci/metrics.hpp"
#include "maci/planner.hpp"
#include "maci/runtime.hpp"
#include "maci/scenario.hpp"
#include "maci/scheduler.hpp"
#include "maci/workflow.hpp"

using namespace maci;
using nlohmann::json;

namespace {

// Runs fn, which is expected to throw Ex, and returns the exception message.
// Returns "" if nothing was thrown so a substring CHECK on the result fails.
template <typename Ex, typename Fn>
std::string message_of(Fn&& fn) {
  try {
    fn();
  } catch (const Ex& e) {
    return e.what();
  } catch (...) {
  }
  return "";
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("scenario serialization round-trips byte-for-byte") {
  for (bool augmented : {false, true})
    for (bool delayed : {false, true}) {
      auto s = builtin_thanksgiving(augmented, delayed);
      auto text = scenario_to_json(s);
      auto reparsed = scenario_from_json(text);
      CHECK(scenario_to_json(reparsed) == text);
    }

  auto s = scenario_from_json(scenario_to_json(builtin_thanksgiving(true, true)));
  CHECK(s.actors.size() == 5);
  CHECK(s.augmented);
  CHECK(s.delayed);
  CHECK(s.deadline == 1080);
  CHECK(s.start_minute == 600);
  CHECK(s.flights.at("james") == 960);
  CHECK(s.flights.at("emily") == 870);
  CHECK(s.road_arrivals.at("michael").location == "home");
  CHECK(s.road_arrivals.at("michael").minute == 900);
  CHECK(s.rental_flyers == std::set<std::string>{"james"});
  CHECK(s.travel.at("home").at("grandma") == 30);
  CHECK(s.travel.at("home").at("airport") == 60);
  CHECK(s.turkey_minutes == 240);
  CHECK(s.side_dish_minutes == 120);
  REQUIRE(s.soft_preferences.size() == 2);
  CHECK(s.soft_preferences[0].rule == "R10");
  CHECK(s.soft_preferences[0].params.at("preferred_driver") == "michael");
  CHECK(s.soft_preferences[0].priority == 2);
  CHECK(s.soft_preferences[1].rule == "R11");
  const auto* james = s.find_actor("james");
  REQUIRE(james != nullptr);
  CHECK(james->driver);
  CHECK(james->available_from == 960);
  const auto* grandma = s.find_actor("grandma");
  REQUIRE(grandma != nullptr);
  CHECK_FALSE(grandma->driver);
  CHECK(grandma->initial_location == "grandma");
}

TEST_CASE("time fields accept minute numbers or H:MM strings") {
  auto s = scenario_from_json(R"({
    "actors": [{"id": "ann", "available_from": "9:30"}],
    "locations": ["a", "b"],
    "travel": {"a": {"b": "0:45"}},
    "flights": {"ann": "13:05"},
    "turkey_minutes": "4:00",
    "deadline": "18:00",
    "start_minute": 600
  })");
  REQUIRE(s.actors.size() == 1);
  CHECK(s.actors[0].available_from == 570);
  CHECK(s.actors[0].driver);                     // defaulted
  CHECK(s.actors[0].initial_location.empty());   // defaulted
  CHECK(s.travel.at("a").at("b") == 45);
  CHECK(s.flights.at("ann") == 785);
  CHECK(s.turkey_minutes == 240);
  CHECK(s.deadline == 1080);
  CHECK(s.start_minute == 600);
  CHECK_FALSE(s.augmented);
  CHECK_FALSE(s.delayed);

  // Non-integer, non-string minutes are refused outright.
  auto msg = message_of<std::invalid_argument>(
      [] { scenario_from_json(R"({"deadline": 13.5})"); });
  CHECK(contains(msg, "minute number or H:MM"));
  // Clock strings go through the same validation as the CSV loader.
  CHECK_THROWS_AS(scenario_from_json(R"({"deadline": "9:5"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(scenario_from_json(R"({"deadline": "25:00"})"),
                  std::invalid_argument);
}

TEST_CASE("malformed documents name the document kind and parse position") {
  auto scenario_msg = message_of<std::invalid_argument>(
      [] { scenario_from_json("{nope"); });
  CHECK(contains(scenario_msg, "malformed scenario JSON"));
  CHECK(contains(scenario_msg, "line"));  // parse position is forwarded

  CHECK(contains(message_of<std::invalid_argument>(
                     [] { workflow_from_json("["); }),
                 "malformed workflow JSON"));
  CHECK(contains(message_of<std::invalid_argument>(
                     [] { schedule_from_json("not json"); }),
                 "malformed schedule JSON"));
  CHECK(contains(message_of<std::invalid_argument>(
                     [] { events_from_json("{]"); }),
                 "malformed events JSON"));
  CHECK(contains(message_of<std::invalid_argument>(
                     [] { agents_from_json("{,}"); }),
                 "malformed agent catalog JSON"));

  // Well-formed JSON with missing required fields is rejected with context.
  CHECK(contains(message_of<std::invalid_argument>(
                     [] { scenario_from_json(R"({"actors": [{}]})"); }),
                 "bad scenario JSON"));
  CHECK(contains(message_of<std::invalid_argument>(
                     [] { schedule_from_json(R"([{"start": 0, "end": 1}])"); }),
                 "bad schedule JSON"));
  CHECK(contains(message_of<std::invalid_argument>(
                     [] { events_from_json(R"([{"detected_at": 0}])"); }),
                 "bad events JSON"));
}

TEST_CASE("planned workflow with assignments survives a round trip") {
  auto result = plan(builtin_thanksgiving_problem(true, false));
  REQUIRE(result.schedule.has_value());
  auto text = workflow_to_json(result.workflow);
  auto w = workflow_from_json(text);
  CHECK(workflow_to_json(w) == text);

  REQUIRE(w.nodes.size() == 4);
  REQUIRE(w.edges.size() == 3);
  const auto* driver1 = w.find_node("driver1");
  REQUIRE(driver1 != nullptr);
  REQUIRE(driver1->assigned_person.has_value());
  CHECK(*driver1->assigned_person == "james");
  REQUIRE(driver1->node_agent.has_value());
  CHECK(*driver1->node_agent == "role-manager");
  const auto* supervisor = w.find_node("supervisor");
  REQUIRE(supervisor != nullptr);
  REQUIRE(supervisor->node_agent.has_value());
  CHECK(*supervisor->node_agent == "compliance-safety");

  bool saw_temporal = false;
  for (const auto& e : w.edges)
    if (e.id == "e_temporal_ce_airport_pickup") {
      saw_temporal = true;
      CHECK(e.kind == EdgeKind::temporal);
      CHECK(e.metadata.at("min_gap") == "0");
      REQUIRE(e.edge_agent.has_value());
      CHECK(*e.edge_agent == "temporal");
    }
  CHECK(saw_temporal);

  CHECK(w.constraints.items.size() == 13);  // 7 explicit + 6 implicit
  REQUIRE(w.score.has_value());
  CHECK(*w.score == doctest::Approx(result.value));
  CHECK(validate_structure(w).ok());

  // Structural guards apply to parsed documents exactly as to built ones.
  CHECK_THROWS_AS(workflow_from_json(R"({
    "nodes": [{"id": "a", "qualifications": ["x"]}],
    "edges": [{"id": "e", "from": "a", "to": "ghost"}]
  })"),
                  std::invalid_argument);
  CHECK_THROWS_AS(workflow_from_json(R"({
    "nodes": [{"id": "a"}, {"id": "a"}]
  })"),
                  std::invalid_argument);
}

TEST_CASE("schedule serialization accepts arrays, wrappers, and clock times") {
  RoleMap roles{{"cook", "sarah"},
                {"driver1", "james"},
                {"driver2", "michael"},
                {"supervisor", "sarah"}};
  auto sched = greedy_schedule(builtin_thanksgiving(false, false), roles);
  REQUIRE(sched.has_value());
  auto text = schedule_to_json(*sched);
  auto back = schedule_from_json(text);
  CHECK(schedule_to_json(back) == text);
  CHECK(schedule_to_csv(back) == schedule_to_csv(*sched));

  auto wrapped = schedule_from_json(R"({"entries": [
    {"start": "14:00", "end": 870, "task": "turkey", "assignees": ["sarah"]}
  ]})");
  REQUIRE(wrapped.entries.size() == 1);
  CHECK(wrapped.entries[0].start == 840);
  CHECK(wrapped.entries[0].end == 870);
  CHECK(wrapped.entries[0].task == "turkey");
  CHECK(wrapped.entries[0].assignees == std::vector<std::string>{"sarah"});

  auto bare = schedule_from_json(R"([{"start": 0, "end": 5, "task": "wait"}])");
  REQUIRE(bare.entries.size() == 1);
  CHECK(bare.entries[0].assignees.empty());
}

TEST_CASE("disruption events round-trip and default their kind") {
  std::vector<DisruptionEvent> events{{600, "flight_delay", "james", 780, 960}};
  auto text = events_to_json(events);
  auto back = events_from_json(text);
  CHECK(events_to_json(back) == text);
  REQUIRE(back.size() == 1);
  CHECK(back[0].detected_at == 600);
  CHECK(back[0].kind == "flight_delay");
  CHECK(back[0].actor == "james");
  CHECK(back[0].old_time == 780);
  CHECK(back[0].new_time == 960);

  auto wrapped = events_from_json(R"({"events": [
    {"detected_at": "10:00", "actor": "james",
     "old_time": "13:00", "new_time": "16:00"}
  ]})");
  REQUIRE(wrapped.size() == 1);
  CHECK(wrapped[0].kind == "flight_delay");  // defaulted
  CHECK(wrapped[0].detected_at == 600);
  CHECK(wrapped[0].new_time == 960);
}

TEST_CASE("agent catalog serialization validates enums and round-trips") {
  AgentRepository repo;
  seed_common_agents(repo);
  auto text = agents_to_json(repo.agents());
  auto back = agents_from_json(text);
  REQUIRE(back.size() == 10);
  CHECK(agents_to_json(back) == text);

  const auto* role_manager = [&]() -> const AgentSpec* {
    for (const auto& a : back)
      if (a.id == "role-manager") return &a;
    return nullptr;
  }();
  REQUIRE(role_manager != nullptr);
  CHECK(role_manager->rating == doctest::Approx(4.9));
  CHECK(role_manager->agent_type == AgentType::common);

  auto wrapped = agents_from_json(R"({"agents": [{"id": "solo"}]})");
  REQUIRE(wrapped.size() == 1);
  CHECK(wrapped[0].context_window == 1024);
  CHECK(wrapped[0].efficiency_class == EfficiencyClass::standard);

  CHECK(contains(message_of<std::invalid_argument>([] {
                   agents_from_json(R"([{"id": "x", "agent_type": "weird"}])");
                 }),
                 "unknown agent_type: weird"));
  CHECK(contains(message_of<std::invalid_argument>([] {
                   agents_from_json(
                       R"([{"id": "x", "efficiency_class": "turbo"}])");
                 }),
                 "unknown efficiency_class: turbo"));
}

TEST_CASE("report and metrics exporters emit the frozen verdicts") {
  auto s = builtin_thanksgiving(false, false);
  auto sched = testutil::fixture("deepseek_table2");
  auto report = check_schedule(s, sched);
  auto j = json::parse(report_to_json(report));
  CHECK(j.at("feasible") == false);
  CHECK(j.at("hard_count") == 1);
  CHECK(j.at("violated_rules") == json::array({"R6"}));
  REQUIRE(j.at("violations").size() == 1);
  CHECK(j["violations"][0].at("rule") == "R6");
  CHECK(j["violations"][0].at("window_start") == 900);
  CHECK(j["violations"][0].at("window_end") == 915);
  CHECK(j["violations"][0].at("hard") == true);
  CHECK(contains(j["violations"][0].at("description").get<std::string>(),
                 "30 minutes"));

  auto m = json::parse(metrics_to_json(compute_metrics(s, sched)));
  CHECK(m.at("satisfaction_pct") == doctest::Approx(90.0));
  CHECK(m.at("total_slack") == 750);
  CHECK(m.at("total_idle") == 810);
  CHECK(m.at("makespan") == 360);
  CHECK(m.at("idle").is_object());
}

TEST_CASE("plan result exporter bundles workflow, schedule, and monitors") {
  auto result = plan(builtin_thanksgiving_problem(true, false));
  auto j = json::parse(plan_result_to_json(result));
  CHECK(j.at("feasible") == true);
  CHECK(j.at("iterations") == 1);
  CHECK(j.at("value") == doctest::Approx(2.129327).epsilon(1e-4));
  CHECK(j.at("defects").is_array());
  CHECK(j.at("defects").empty());
  CHECK(j.at("workflow").at("nodes").size() == 4);
  CHECK(j.at("schedule").is_array());
  CHECK(j.at("schedule").size() > 0);
  CHECK(j.at("node_agents").at("driver1") == "role-manager");
  CHECK(j.at("node_agents").at("supervisor") == "compliance-safety");
  CHECK(j.at("edge_agents").size() == 3);
  CHECK(j.at("edge_agents").at("e_spatial_ce_travel_times") == "spatial");
  CHECK(j.at("metrics").at("satisfaction_pct").is_number());

  // The embedded workflow document parses back through the workflow loader.
  auto embedded = workflow_from_json(j.at("workflow").dump());
  CHECK(embedded.nodes.size() == 4);
  auto sched = schedule_from_json(j.at("schedule").dump());
  CHECK(schedule_to_csv(sched) == schedule_to_csv(*result.schedule));
}

TEST_CASE("text file helpers round-trip and name the path on failure") {
  namespace fs = std::filesystem;
  auto path = (fs::temp_directory_path() / "maci_json_io_test.txt").string();
  std::string content = "line one\nline two\n\ttabbed — unicode ok\n";
  write_text_file(path, content);
  CHECK(read_text_file(path) == content);
  write_text_file(path, "");  // overwrite with empty is fine
  CHECK(read_text_file(path).empty());
  fs::remove(path);

  auto missing = message_of<std::runtime_error>(
      [] { read_text_file("/no/such/dir/input.json"); });
  CHECK(contains(missing, "cannot read"));
  CHECK(contains(missing, "/no/such/dir/input.json"));
  auto unwritable = message_of<std::runtime_error>(
      [] { write_text_file("/no/such/dir/output.json", "x"); });
  CHECK(contains(unwritable, "cannot write"));
  CHECK(contains(unwritable, "/no/such/dir/output.json"));
}

TEST_CASE("shipped data files load through the JSON layer") {
  auto agents = agents_from_json(read_text_file(testutil::data_path("agents.json")));
  AgentRepository repo;
  seed_common_agents(repo);
  // The catalog on disk is hand-formatted but semantically identical to the
  // seeded repository.
  CHECK(agents_to_json(agents) == agents_to_json(repo.agents()));

  const std::pair<std::string, std::pair<bool, bool>> files[] = {
      {"scenarios/thanksgiving.json", {false, false}},
      {"scenarios/thanksgiving_augmented.json", {true, false}},
      {"scenarios/thanksgiving_delayed.json", {false, true}},
      {"scenarios/thanksgiving_augmented_delayed.json", {true, true}},
  };
  for (const auto& [name, flags] : files) {
    CAPTURE(name);
    auto text = read_text_file(testutil::data_path(name));
    CHECK(text == scenario_to_json(builtin_thanksgiving(flags.first, flags.second)));
    auto s = scenario_from_json(text);
    CHECK(s.augmented == flags.first);
    CHECK(s.delayed == flags.second);
    CHECK(s.deadline == 1080);
  }
}

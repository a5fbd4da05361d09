// Planning-pipeline benchmarks: network construction, full planning,
// rule checking, and disruption replanning on the holiday scenario.
#include <benchmark/benchmark.h>

#include "maci/agents.hpp"
#include "maci/checker.hpp"
#include "maci/planner.hpp"
#include "maci/runtime.hpp"
#include "maci/scenario.hpp"
#include "maci/scheduler.hpp"

using namespace maci;

namespace {

Schedule fixture(const std::string& name) {
  return load_schedule_csv(std::string(MACI_DATA_DIR) + "/fixtures/" + name +
                           ".csv");
}

}  // namespace

static void BM_BuildNetwork(benchmark::State& state) {
  auto p = builtin_thanksgiving_problem(true, false);
  for (auto _ : state) {
    auto w = build_network(p);
    benchmark::DoNotOptimize(w.nodes.size());
  }
}
BENCHMARK(BM_BuildNetwork);

static void BM_PlanBaseline(benchmark::State& state) {
  auto p = builtin_thanksgiving_problem(false, false);
  for (auto _ : state) {
    auto r = plan(p);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_PlanBaseline)->Unit(benchmark::kMicrosecond);

static void BM_PlanAugmentedDelayed(benchmark::State& state) {
  auto p = builtin_thanksgiving_problem(true, true);
  for (auto _ : state) {
    auto r = plan(p);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_PlanAugmentedDelayed)->Unit(benchmark::kMicrosecond);

static void BM_GreedySchedule(benchmark::State& state) {
  auto s = builtin_thanksgiving(true, false);
  RoleMap roles{{"cook", "sarah"},
                {"driver1", "james"},
                {"driver2", "michael"},
                {"supervisor", "sarah"}};
  for (auto _ : state) {
    auto sched = greedy_schedule(s, roles);
    benchmark::DoNotOptimize(sched.has_value());
  }
}
BENCHMARK(BM_GreedySchedule);

static void BM_CheckRecordedPlan(benchmark::State& state) {
  auto s = builtin_thanksgiving(false, false);
  auto sched = fixture("deepseek_sequential");
  for (auto _ : state) {
    auto report = check_schedule(s, sched);
    benchmark::DoNotOptimize(report.feasible());
  }
}
BENCHMARK(BM_CheckRecordedPlan);

static void BM_HandleFlightDelay(benchmark::State& state) {
  auto p = builtin_thanksgiving_problem(true, false);
  DisruptionEvent e{600, "flight_delay", "james", 780, 960};
  for (auto _ : state) {
    auto out = handle_disruption(p, e);
    benchmark::DoNotOptimize(out.result.value);
  }
}
BENCHMARK(BM_HandleFlightDelay)->Unit(benchmark::kMicrosecond);

static void BM_ScheduleToTemporalNetwork(benchmark::State& state) {
  auto s = builtin_thanksgiving(false, false);
  auto sched = fixture("deepseek_sequential");
  for (auto _ : state) {
    auto stn = schedule_stn(s, sched);
    bool ok = stn_consistent(stn);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_ScheduleToTemporalNetwork);

#include "doctest.h"

#include <stdexcept>

#include "helpers.hpp"
#include "maci/checker.hpp"
#include "maci/metrics.hpp"
#include "maci/scenario.hpp"

using namespace maci;

namespace {

ScheduleMetrics metrics_for(const std::string& fixture, bool augmented,
                            bool delayed) {
  auto s = builtin_thanksgiving(augmented, delayed);
  return compute_metrics(s, testutil::fixture(fixture));
}

}  // namespace

TEST_CASE("sequential schedules rank deepseek > gpt4o > claude on slack") {
  auto ds = metrics_for("deepseek_sequential", false, false);
  auto gpt = metrics_for("gpt4o_sequential", false, false);
  auto cl = metrics_for("claude_sequential", false, false);

  CHECK(ds.satisfaction_pct == doctest::Approx(100.0));
  CHECK(gpt.satisfaction_pct == doctest::Approx(100.0));
  CHECK(cl.satisfaction_pct == doctest::Approx(100.0));

  CHECK(ds.total_slack == 480);
  CHECK(gpt.total_slack == 240);
  CHECK(cl.total_slack == 180);
  CHECK(ds.total_slack > gpt.total_slack);
  CHECK(gpt.total_slack > cl.total_slack);

  CHECK(ds.total_idle() == 660);
  CHECK(gpt.total_idle() == 360);
  CHECK(cl.total_idle() == 300);

  // All three compress the work into the same 300-minute band.
  CHECK(ds.makespan == 300);
  CHECK(gpt.makespan == 300);
  CHECK(cl.makespan == 300);
}

TEST_CASE("per-actor idle breakdown for the deepseek sequential schedule") {
  auto m = metrics_for("deepseek_sequential", false, false);
  REQUIRE(m.idle.size() == 5);
  CHECK(m.idle.at("sarah") == 120);
  CHECK(m.idle.at("james") == 180);
  CHECK(m.idle.at("emily") == 120);
  CHECK(m.idle.at("michael") == 120);
  CHECK(m.idle.at("grandma") == 120);
  for (const auto& [actor, idle] : m.idle) {
    CAPTURE(actor);
    CHECK(idle >= 0);
  }
}

TEST_CASE("published table plan metrics reflect its one violation") {
  auto m = metrics_for("deepseek_table2", false, false);
  CHECK(m.satisfaction_pct == doctest::Approx(90.0));  // 9 of 10 rules hold
  CHECK(m.total_slack == 750);
  CHECK(m.total_idle() == 810);
  CHECK(m.makespan == 360);
}

TEST_CASE("reactive replans: metrics under the detection-to-dinner window") {
  auto revised = metrics_for("gpt4o_revised_reactive", true, true);
  CHECK(revised.satisfaction_pct == doctest::Approx(100.0 * 10 / 12));
  CHECK(revised.total_slack == 360);
  CHECK(revised.total_idle() == 1890);
  CHECK(revised.makespan == 240);

  auto first = metrics_for("gpt4o_reactive", true, true);
  CHECK(first.satisfaction_pct == doctest::Approx(75.0));  // 9 of 12 rules
  CHECK(first.total_slack == 870);
  CHECK(first.total_idle() == 1845);
  CHECK(first.makespan == 480);

  auto claude = metrics_for("claude_reactive", true, true);
  CHECK(claude.satisfaction_pct == doctest::Approx(100.0));
  CHECK(claude.total_slack == 240);
  CHECK(claude.total_idle() == 2010);

  auto ds = metrics_for("deepseek_reactive", true, true);
  CHECK(ds.satisfaction_pct == doctest::Approx(100.0));
  CHECK(ds.total_slack == 240);
  CHECK(ds.total_idle() == 1620);

  // The deepseek replan keeps everyone strictly busier.
  CHECK(ds.total_idle() < claude.total_idle());
}

TEST_CASE("explicit-report overload agrees with the recomputing overload") {
  auto s = builtin_thanksgiving(true, true);
  auto sched = testutil::fixture("gpt4o_reactive");
  auto report = check_schedule(s, sched);
  auto a = compute_metrics(s, sched);
  auto b = compute_metrics(s, sched, report);
  CHECK(a.satisfaction_pct == doctest::Approx(b.satisfaction_pct));
  CHECK(a.total_slack == b.total_slack);
  CHECK(a.idle == b.idle);
  CHECK(a.makespan == b.makespan);
}

TEST_CASE("total idle sums the per-actor map") {
  ScheduleMetrics m;
  CHECK(m.total_idle() == 0);
  m.idle["a"] = 30;
  m.idle["b"] = 12;
  CHECK(m.total_idle() == 42);
}

TEST_CASE("plan-quality ratio aggregation") {
  CHECK(ipc_score({}) == doctest::Approx(0.0));
  CHECK(ipc_score({{10.0, 10.0}}) == doctest::Approx(1.0));
  CHECK(ipc_score({{10.0, 10.0}, {10.0, 11.0}}) ==
        doctest::Approx(1.0 + 10.0 / 11.0));

  // Adding an instance can only raise the aggregate.
  double two = ipc_score({{5.0, 9.0}, {7.0, 7.0}});
  double three = ipc_score({{5.0, 9.0}, {7.0, 7.0}, {3.0, 100.0}});
  CHECK(three > two);

  CHECK_THROWS_AS(ipc_score({{10.0, 9.0}}), std::invalid_argument);
  CHECK_THROWS_AS(ipc_score({{0.0, 5.0}}), std::invalid_argument);
  CHECK_THROWS_AS(ipc_score({{-2.0, 5.0}}), std::invalid_argument);
}

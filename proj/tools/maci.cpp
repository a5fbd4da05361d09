// Command-line front end: plan / check / disrupt / tsp / serve.
//
// Exit codes: 0 success, 1 ran fine but the plan or schedule has hard
// violations (or is infeasible), 2 usage or input errors.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "maci/checker.hpp"
#include "maci/json_io.hpp"
#include "maci/metrics.hpp"
#include "maci/planner.hpp"
#include "maci/registry.hpp"
#include "maci/runtime.hpp"
#include "maci/scenario.hpp"
#include "maci/service.hpp"
#include "maci/tsp.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kUsage = 2;

maci::Scenario load_scenario(const std::string& file, const std::string& preset) {
  if (!file.empty())
    return maci::scenario_from_json(maci::read_text_file(file));
  auto builtin = maci::builtin_scenario(preset);
  if (!builtin)
    throw std::invalid_argument("unknown scenario preset: " + preset);
  return *builtin;
}

maci::Schedule load_schedule(const std::string& file) {
  if (file.size() > 5 && file.substr(file.size() - 5) == ".json")
    return maci::schedule_from_json(maci::read_text_file(file));
  return maci::load_schedule_csv(file);
}

// A planning problem over arbitrary dinner-day facts: the standard role set
// with availability and the start-of-day constraint synced to the facts.
maci::PlanningProblem problem_for(const maci::Scenario& facts) {
  auto p = maci::builtin_thanksgiving_problem(facts.augmented, facts.delayed);
  p.facts = facts;
  for (auto& person : p.people)
    if (const auto* actor = facts.find_actor(person.id)) {
      person.available_from = actor->available_from;
      person.initial_location = actor->initial_location;
    }
  for (auto& c : p.explicit_constraints)
    if (c.rule == "R12")
      c.params["start"] = std::to_string(facts.start_minute);
  return p;
}

void apply_pack_override(maci::PlanningProblem& p, const std::string& packs) {
  if (packs.empty()) return;
  p.knowledge_packs.clear();
  if (packs == "none") return;
  std::stringstream ss(packs);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) p.knowledge_packs.push_back(item);
}

void print_schedule(const maci::Schedule& s) {
  std::cout << "  start  end    task                     assignees\n";
  for (const auto& e : s.entries) {
    std::ostringstream who;
    for (size_t i = 0; i < e.assignees.size(); ++i)
      who << (i ? ";" : "") << e.assignees[i];
    std::cout << "  " << std::left << std::setw(7) << maci::format_minute(e.start)
              << std::setw(7) << maci::format_minute(e.end) << std::setw(25)
              << e.task << who.str() << "\n";
  }
}

void print_metrics(const maci::ScheduleMetrics& m) {
  std::cout << "metrics: satisfaction " << m.satisfaction_pct << "% | slack "
            << m.total_slack << " min | idle " << m.total_idle()
            << " min | makespan " << m.makespan << " min\n";
}

int run_plan(const std::string& scenario_file, const std::string& preset,
             const std::string& packs, const std::string& out) {
  auto problem = problem_for(load_scenario(scenario_file, preset));
  apply_pack_override(problem, packs);
  auto result = maci::plan(problem);

  auto parts = maci::partition_constraints(result.workflow.constraints);
  std::cout << "workflow: " << result.workflow.nodes.size() << " nodes, "
            << result.workflow.edges.size() << " edges, "
            << result.workflow.constraints.items.size() << " constraints ("
            << parts.explicit_stated.size() << " explicit / "
            << parts.implicit.size() << " implicit / " << parts.derived.size()
            << " derived)\n";
  std::cout << "  role        person    monitor\n";
  for (const auto& n : result.workflow.nodes)
    std::cout << "  " << std::left << std::setw(12) << n.role_name
              << std::setw(10) << n.assigned_person.value_or("-")
              << n.node_agent.value_or("-") << "\n";
  for (const auto& d : result.defects) std::cout << "defect: " << d << "\n";

  if (result.schedule) {
    std::cout << "schedule (" << result.schedule->entries.size()
              << " entries):\n";
    print_schedule(*result.schedule);
    print_metrics(result.schedule_metrics);
    std::cout << "value V = " << result.value << " after " << result.iterations
              << " refinement sweeps\n";
  } else {
    std::cout << "no feasible schedule\n";
  }
  if (!out.empty()) maci::write_text_file(out, maci::plan_result_to_json(result));
  return result.schedule ? kOk : kInfeasible;
}

int run_check(const std::string& scenario_file, const std::string& preset,
              const std::string& schedule_file, const std::string& out) {
  auto scenario = load_scenario(scenario_file, preset);
  auto schedule = load_schedule(schedule_file);
  auto report = maci::check_schedule(scenario, schedule);
  auto metrics = maci::compute_metrics(scenario, schedule, report);

  int soft = static_cast<int>(report.items.size()) - report.hard_count();
  for (const auto& v : report.items)
    std::cout << "  [" << (v.hard ? "hard" : "soft") << "] " << v.rule << " "
              << maci::format_minute(v.window_start) << "-"
              << maci::format_minute(v.window_end) << "  " << v.description
              << "\n";
  std::cout << report.hard_count() << " hard violations, " << soft
            << " soft\n";
  print_metrics(metrics);
  if (!out.empty()) maci::write_text_file(out, maci::report_to_json(report));
  return report.feasible() ? kOk : kInfeasible;
}

int run_disrupt(const std::string& scenario_file, const std::string& preset,
                const std::string& events_file, const std::string& out) {
  auto problem = problem_for(load_scenario(scenario_file, preset));

  std::vector<maci::DisruptionEvent> events;
  if (events_file.empty()) {
    // The stock disruption: the late flyer slips 13:00 -> 16:00, known 10:00.
    events.push_back({maci::parse_minute("10:00"), "flight_delay", "james",
                      maci::parse_minute("13:00"), maci::parse_minute("16:00")});
  } else {
    events = maci::events_from_json(maci::read_text_file(events_file));
  }

  bool feasible = true;
  std::string last_json;
  for (const auto& event : events) {
    auto outcome = maci::handle_disruption(problem, event);
    std::cout << "alert: " << event.kind << " " << event.actor << " "
              << maci::format_minute(event.old_time) << " -> "
              << maci::format_minute(event.new_time) << " (severity "
              << outcome.alert.severity << ", detected "
              << maci::format_minute(event.detected_at) << ")\n";
    for (const auto& [minute, line] : outcome.rationale)
      std::cout << "  " << maci::format_minute(minute) << "  " << line << "\n";
    if (outcome.result.schedule) {
      std::cout << "replanned schedule:\n";
      print_schedule(*outcome.result.schedule);
      print_metrics(outcome.result.schedule_metrics);
    } else {
      std::cout << "no feasible replanned schedule\n";
      feasible = false;
    }
    problem = outcome.updated_problem;
    last_json = maci::plan_result_to_json(outcome.result);
  }
  if (!out.empty() && !last_json.empty()) maci::write_text_file(out, last_json);
  return feasible ? kOk : kInfeasible;
}

int run_tsp(const std::string& matrix_file, const std::string& preset,
            const std::string& algo, unsigned seed, const std::string& out) {
  maci::tsp::DistanceMatrix m = matrix_file.empty()
                                    ? maci::tsp::campus5()
                                    : maci::tsp::load_matrix(matrix_file);

  auto print_tour = [&](const std::vector<int>& order) {
    std::cout << "tour: ";
    for (size_t i = 0; i < order.size(); ++i)
      std::cout << (i ? " -> " : "") << order[i];
    if (!order.empty()) std::cout << " -> " << order[0];
    std::cout << "\n";
  };

  long best = 0, evaluations = -1;
  std::vector<int> order;
  if (algo == "brute") {
    auto r = maci::tsp::brute_force(m);
    best = r.optimal_length;
    evaluations = r.evaluations;
    if (!r.optimal_tours.empty()) order = r.optimal_tours.front().order;
  } else if (algo == "hk" || algo == "held-karp") {
    best = maci::tsp::held_karp(m);  // length-only dynamic program
  } else if (algo == "nn") {
    auto t = maci::tsp::nearest_neighbor(m);
    best = t.length;
    order = t.order;
    evaluations = m.n;
  } else if (algo == "aco") {
    auto params = preset == "small" ? maci::tsp::AcoParams::small_preset(seed)
                                    : maci::tsp::AcoParams::large_preset(seed);
    auto r = maci::tsp::aco(m, params);
    best = r.tour.length;
    order = r.tour.order;
    evaluations = r.evaluations;
  } else if (algo == "ga") {
    maci::tsp::GaParams p;
    p.seed = seed;
    auto r = maci::tsp::ga(m, p);
    best = r.tour.length;
    order = r.tour.order;
    evaluations = r.evaluations;
  } else if (algo == "sa") {
    maci::tsp::SaParams p;
    p.seed = seed;
    auto r = maci::tsp::sa(m, p);
    best = r.tour.length;
    order = r.tour.order;
    evaluations = r.evaluations;
  } else {
    throw std::invalid_argument("unknown algorithm: " + algo);
  }

  std::cout << "algorithm: " << algo << "\n";
  std::cout << "best length: " << best << "\n";
  if (!order.empty()) print_tour(order);
  if (evaluations >= 0) std::cout << "evaluations: " << evaluations << "\n";
  if (!out.empty()) {
    std::ostringstream js;
    js << "{\"algorithm\":\"" << algo << "\",\"best_length\":" << best
       << ",\"evaluations\":" << evaluations << "}\n";
    maci::write_text_file(out, js.str());
  }
  return kOk;
}

int run_serve(const std::string& bind) {
  auto [host, port] = maci::parse_bind(bind);
  maci::RegistryService service;
  service.registry().register_bridge("engine");
  std::cout << "registry service listening on " << host << ":" << port
            << " (engine bridge registered)\n";
  if (!service.run(host, port)) {
    std::cerr << "failed to bind " << host << ":" << port << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic multi-agent dinner planner and solver toolkit"};
  app.require_subcommand(1);

  std::string scenario_file, preset = "thanksgiving-augmented";
  std::string schedule_file, events_file, matrix_file, out, packs;
  std::string tsp_preset = "large", algo = "brute", bind;
  unsigned seed = 1;

  auto* plan_cmd = app.add_subcommand("plan", "build and refine a dinner plan");
  plan_cmd->add_option("--scenario", scenario_file, "scenario JSON file");
  plan_cmd->add_option("--preset", preset, "builtin scenario name");
  plan_cmd->add_option("--packs", packs,
                       "comma list of knowledge packs, or 'none'");
  plan_cmd->add_option("--out", out, "write machine-readable result JSON");

  auto* check_cmd = app.add_subcommand("check", "validate a schedule");
  check_cmd->add_option("--scenario", scenario_file, "scenario JSON file");
  check_cmd->add_option("--preset", preset, "builtin scenario name");
  check_cmd->add_option("--schedule", schedule_file, "schedule CSV or JSON")
      ->required();
  check_cmd->add_option("--out", out, "write violation report JSON");

  auto* disrupt_cmd =
      app.add_subcommand("disrupt", "replan after disruption events");
  disrupt_cmd->add_option("--scenario", scenario_file, "scenario JSON file");
  disrupt_cmd->add_option("--preset", preset, "builtin scenario name");
  disrupt_cmd->add_option("--events", events_file,
                          "events JSON (default: the stock 3h flight delay)");
  disrupt_cmd->add_option("--out", out, "write replanned result JSON");

  auto* tsp_cmd = app.add_subcommand("tsp", "solve a route instance");
  tsp_cmd->add_option("--matrix", matrix_file,
                      "matrix file (first line n, then n rows); default: "
                      "the 5-site campus instance");
  tsp_cmd->add_option("--preset", tsp_preset,
                      "ant-colony preset: small (50x20) or large (100x50)");
  tsp_cmd->add_option("--algo", algo, "brute|hk|nn|aco|ga|sa");
  tsp_cmd->add_option("--seed", seed, "random seed for aco/ga/sa");
  tsp_cmd->add_option("--out", out, "write result JSON");

  auto* serve_cmd = app.add_subcommand("serve", "run the agent registry HTTP service");
  serve_cmd->add_option("--bind", bind, "host:port (default 127.0.0.1:8080)")
      ->envname("MACI_BIND");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (plan_cmd->parsed())
      return run_plan(scenario_file, preset, packs, out);
    if (check_cmd->parsed())
      return run_check(scenario_file, preset, schedule_file, out);
    if (disrupt_cmd->parsed())
      return run_disrupt(scenario_file, preset, events_file, out);
    if (tsp_cmd->parsed())
      return run_tsp(matrix_file, tsp_preset, algo, seed, out);
    if (serve_cmd->parsed()) return run_serve(bind);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

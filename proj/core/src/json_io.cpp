#include "maci/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace maci {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);  // parse_error carries line/column position
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed " + what + " JSON: " + e.what());
  }
}

Minute minute_of(const json& v) {
  if (v.is_number_integer()) return v.get<Minute>();
  if (v.is_string()) return parse_minute(v.get<std::string>());
  throw std::invalid_argument("expected a minute number or H:MM string");
}

std::vector<std::string> string_list(const json& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.get<std::string>());
  return out;
}

std::set<std::string> string_set(const json& v) {
  std::set<std::string> out;
  for (const auto& s : v) out.insert(s.get<std::string>());
  return out;
}

std::map<std::string, std::string> string_map(const json& v) {
  std::map<std::string, std::string> out;
  for (auto it = v.begin(); it != v.end(); ++it)
    out[it.key()] = it.value().get<std::string>();
  return out;
}

}  // namespace

std::string scenario_to_json(const Scenario& s) {
  json j;
  j["actors"] = json::array();
  for (const auto& a : s.actors)
    j["actors"].push_back({{"id", a.id},
                           {"driver", a.driver},
                           {"qualifications", a.qualifications},
                           {"initial_location", a.initial_location},
                           {"available_from", a.available_from}});
  j["locations"] = s.locations;
  j["travel"] = s.travel;
  j["flights"] = s.flights;
  j["road_arrivals"] = json::object();
  for (const auto& [id, arr] : s.road_arrivals)
    j["road_arrivals"][id] = {{"location", arr.location}, {"minute", arr.minute}};
  j["rental_flyers"] = s.rental_flyers;
  j["turkey_minutes"] = s.turkey_minutes;
  j["side_dish_minutes"] = s.side_dish_minutes;
  j["deadline"] = s.deadline;
  j["start_minute"] = s.start_minute;
  j["augmented"] = s.augmented;
  j["delayed"] = s.delayed;
  j["soft_preferences"] = json::array();
  for (const auto& p : s.soft_preferences)
    j["soft_preferences"].push_back(
        {{"rule", p.rule}, {"params", p.params}, {"priority", p.priority}});
  return j.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
  json j = parse_or_throw(text, "scenario");
  Scenario s;
  try {
    for (const auto& a : j.value("actors", json::array())) {
      ScenarioActor actor;
      actor.id = a.at("id").get<std::string>();
      actor.driver = a.value("driver", true);
      if (a.contains("qualifications"))
        actor.qualifications = string_set(a["qualifications"]);
      actor.initial_location = a.value("initial_location", std::string{});
      if (a.contains("available_from"))
        actor.available_from = minute_of(a["available_from"]);
      s.actors.push_back(std::move(actor));
    }
    if (j.contains("locations")) s.locations = string_list(j["locations"]);
    if (j.contains("travel"))
      for (auto from = j["travel"].begin(); from != j["travel"].end(); ++from)
        for (auto to = from.value().begin(); to != from.value().end(); ++to)
          s.travel[from.key()][to.key()] = minute_of(to.value());
    if (j.contains("flights"))
      for (auto it = j["flights"].begin(); it != j["flights"].end(); ++it)
        s.flights[it.key()] = minute_of(it.value());
    if (j.contains("road_arrivals"))
      for (auto it = j["road_arrivals"].begin(); it != j["road_arrivals"].end();
           ++it)
        s.road_arrivals[it.key()] = {
            it.value().at("location").get<std::string>(),
            minute_of(it.value().at("minute"))};
    if (j.contains("rental_flyers"))
      s.rental_flyers = string_set(j["rental_flyers"]);
    if (j.contains("turkey_minutes"))
      s.turkey_minutes = minute_of(j["turkey_minutes"]);
    if (j.contains("side_dish_minutes"))
      s.side_dish_minutes = minute_of(j["side_dish_minutes"]);
    if (j.contains("deadline")) s.deadline = minute_of(j["deadline"]);
    if (j.contains("start_minute")) s.start_minute = minute_of(j["start_minute"]);
    s.augmented = j.value("augmented", false);
    s.delayed = j.value("delayed", false);
    for (const auto& p : j.value("soft_preferences", json::array())) {
      SoftPreference pref;
      pref.rule = p.at("rule").get<std::string>();
      if (p.contains("params")) pref.params = string_map(p["params"]);
      pref.priority = p.value("priority", 1);
      s.soft_preferences.push_back(std::move(pref));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad scenario JSON: ") + e.what());
  }
  return s;
}

std::string workflow_to_json(const Workflow& w) {
  json j;
  j["nodes"] = json::array();
  for (const auto& n : w.nodes) {
    json node{{"id", n.id},
              {"role_name", n.role_name},
              {"qualifications", n.qualifications}};
    if (n.assigned_person) node["assigned_person"] = *n.assigned_person;
    if (n.node_agent) node["node_agent"] = *n.node_agent;
    j["nodes"].push_back(std::move(node));
  }
  j["edges"] = json::array();
  for (const auto& e : w.edges) {
    json edge{{"id", e.id},
              {"from", e.from_node},
              {"to", e.to_node},
              {"kind", to_string(e.kind)},
              {"metadata", e.metadata}};
    if (e.edge_agent) edge["edge_agent"] = *e.edge_agent;
    j["edges"].push_back(std::move(edge));
  }
  j["constraints"] = json::array();
  for (const auto& c : w.constraints.items)
    j["constraints"].push_back({{"id", c.id},
                                {"origin", to_string(c.origin)},
                                {"kind", to_string(c.kind)},
                                {"hard", c.hard},
                                {"priority", c.priority},
                                {"rule", c.rule},
                                {"params", c.params},
                                {"relates", c.relates}});
  j["metrics"] = {{"w_satisfaction", w.metrics.w_satisfaction},
                  {"w_slack", w.metrics.w_slack},
                  {"w_idle", w.metrics.w_idle},
                  {"horizon_minutes", w.metrics.horizon_minutes}};
  if (w.score) j["score"] = *w.score;
  return j.dump(2) + "\n";
}

Workflow workflow_from_json(const std::string& text) {
  json j = parse_or_throw(text, "workflow");
  Workflow w;
  try {
    for (const auto& n : j.value("nodes", json::array())) {
      RoleNode node;
      node.id = n.at("id").get<std::string>();
      node.role_name = n.value("role_name", node.id);
      if (n.contains("qualifications"))
        node.qualifications = string_set(n["qualifications"]);
      if (n.contains("assigned_person"))
        node.assigned_person = n["assigned_person"].get<std::string>();
      if (n.contains("node_agent"))
        node.node_agent = n["node_agent"].get<std::string>();
      w.add_node(node);
    }
    for (const auto& e : j.value("edges", json::array())) {
      DependencyEdge edge;
      edge.id = e.at("id").get<std::string>();
      edge.from_node = e.at("from").get<std::string>();
      edge.to_node = e.at("to").get<std::string>();
      edge.kind = edge_kind_from_string(e.value("kind", "temporal"));
      if (e.contains("metadata")) edge.metadata = string_map(e["metadata"]);
      if (e.contains("edge_agent"))
        edge.edge_agent = e["edge_agent"].get<std::string>();
      w.add_edge(edge);
    }
    for (const auto& c : j.value("constraints", json::array())) {
      Constraint item;
      item.id = c.at("id").get<std::string>();
      item.origin = origin_from_string(c.value("origin", "explicit"));
      item.kind = constraint_kind_from_string(c.value("kind", "temporal"));
      item.hard = c.value("hard", true);
      item.priority = c.value("priority", 5);
      item.rule = c.at("rule").get<std::string>();
      if (c.contains("params")) item.params = string_map(c["params"]);
      if (c.contains("relates")) item.relates = string_list(c["relates"]);
      w.constraints.add(item);
    }
    if (j.contains("metrics")) {
      const auto& m = j["metrics"];
      w.metrics.w_satisfaction = m.value("w_satisfaction", 1.0);
      w.metrics.w_slack = m.value("w_slack", 0.5);
      w.metrics.w_idle = m.value("w_idle", 0.25);
      w.metrics.horizon_minutes = m.value("horizon_minutes", 480);
    }
    if (j.contains("score")) w.score = j["score"].get<double>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad workflow JSON: ") + e.what());
  }
  return w;
}

std::string schedule_to_json(const Schedule& s) {
  json j = json::array();
  for (const auto& e : s.entries)
    j.push_back({{"start", e.start},
                 {"end", e.end},
                 {"task", e.task},
                 {"assignees", e.assignees}});
  return j.dump(2) + "\n";
}

Schedule schedule_from_json(const std::string& text) {
  json j = parse_or_throw(text, "schedule");
  Schedule s;
  try {
    const json& rows = j.is_array() ? j : j.at("entries");
    for (const auto& row : rows) {
      ScheduleEntry e;
      e.start = minute_of(row.at("start"));
      e.end = minute_of(row.at("end"));
      e.task = row.at("task").get<std::string>();
      if (row.contains("assignees")) e.assignees = string_list(row["assignees"]);
      s.entries.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad schedule JSON: ") + e.what());
  }
  return s;
}

std::string events_to_json(const std::vector<DisruptionEvent>& events) {
  json j = json::array();
  for (const auto& e : events)
    j.push_back({{"detected_at", e.detected_at},
                 {"kind", e.kind},
                 {"actor", e.actor},
                 {"old_time", e.old_time},
                 {"new_time", e.new_time}});
  return j.dump(2) + "\n";
}

std::vector<DisruptionEvent> events_from_json(const std::string& text) {
  json j = parse_or_throw(text, "events");
  std::vector<DisruptionEvent> out;
  try {
    const json& rows = j.is_array() ? j : j.at("events");
    for (const auto& row : rows) {
      DisruptionEvent e;
      e.detected_at = minute_of(row.at("detected_at"));
      e.kind = row.value("kind", "flight_delay");
      e.actor = row.at("actor").get<std::string>();
      e.old_time = minute_of(row.at("old_time"));
      e.new_time = minute_of(row.at("new_time"));
      out.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad events JSON: ") + e.what());
  }
  return out;
}

std::string agents_to_json(const std::vector<AgentSpec>& agents) {
  json j = json::array();
  for (const auto& a : agents)
    j.push_back({{"id", a.id},
                 {"input_schema", a.input_schema},
                 {"output_schema", a.output_schema},
                 {"agent_type",
                  a.agent_type == AgentType::common ? "common" : "specialized"},
                 {"capabilities", a.capabilities},
                 {"context_window", a.context_window},
                 {"efficiency_class",
                  a.efficiency_class == EfficiencyClass::light ? "light"
                                                               : "standard"},
                 {"rating", a.rating}});
  return j.dump(2) + "\n";
}

std::vector<AgentSpec> agents_from_json(const std::string& text) {
  json j = parse_or_throw(text, "agent catalog");
  std::vector<AgentSpec> out;
  try {
    const json& rows = j.is_array() ? j : j.at("agents");
    for (const auto& row : rows) {
      AgentSpec a;
      a.id = row.at("id").get<std::string>();
      a.input_schema = row.value("input_schema", a.input_schema);
      a.output_schema = row.value("output_schema", a.output_schema);
      std::string type = row.value("agent_type", "common");
      if (type != "common" && type != "specialized")
        throw std::invalid_argument("unknown agent_type: " + type);
      a.agent_type =
          type == "common" ? AgentType::common : AgentType::specialized;
      if (row.contains("capabilities"))
        a.capabilities = string_set(row["capabilities"]);
      a.context_window = row.value("context_window", 1024);
      std::string eff = row.value("efficiency_class", "standard");
      if (eff != "light" && eff != "standard")
        throw std::invalid_argument("unknown efficiency_class: " + eff);
      a.efficiency_class =
          eff == "light" ? EfficiencyClass::light : EfficiencyClass::standard;
      a.rating = row.value("rating", 0.0);
      out.push_back(std::move(a));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad agent catalog JSON: ") +
                                e.what());
  }
  return out;
}

std::string report_to_json(const ViolationReport& report) {
  json j;
  j["feasible"] = report.feasible();
  j["hard_count"] = report.hard_count();
  j["violated_rules"] = report.violated_rules();
  j["violations"] = json::array();
  for (const auto& v : report.items)
    j["violations"].push_back({{"rule", v.rule},
                               {"window_start", v.window_start},
                               {"window_end", v.window_end},
                               {"description", v.description},
                               {"hard", v.hard}});
  return j.dump(2) + "\n";
}

std::string metrics_to_json(const ScheduleMetrics& metrics) {
  json j;
  j["satisfaction_pct"] = metrics.satisfaction_pct;
  j["total_slack"] = metrics.total_slack;
  j["idle"] = metrics.idle;
  j["total_idle"] = metrics.total_idle();
  j["makespan"] = metrics.makespan;
  return j.dump(2) + "\n";
}

std::string plan_result_to_json(const PlanResult& result) {
  json j;
  j["feasible"] = result.schedule.has_value();
  j["value"] = result.value;
  j["iterations"] = result.iterations;
  j["defects"] = result.defects;
  j["workflow"] = json::parse(workflow_to_json(result.workflow));
  if (result.schedule)
    j["schedule"] = json::parse(schedule_to_json(*result.schedule));
  j["metrics"] = json::parse(metrics_to_json(result.schedule_metrics));
  j["node_agents"] = result.node_agents.node_map;
  j["edge_agents"] = result.edge_agents.edge_map;
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace maci

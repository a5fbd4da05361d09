#include "maci/scenario.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace maci {

const ScenarioActor* Scenario::find_actor(const std::string& id) const {
  for (const auto& a : actors)
    if (a.id == id) return &a;
  return nullptr;
}

Minute Scenario::travel_minutes(const std::string& from, const std::string& to) const {
  auto row = travel.find(from);
  if (row != travel.end()) {
    auto cell = row->second.find(to);
    if (cell != row->second.end()) return cell->second;
  }
  throw std::invalid_argument("no travel time for " + from + " -> " + to);
}

bool Scenario::known_location(const std::string& loc) const {
  for (const auto& l : locations)
    if (l == loc) return true;
  return false;
}

std::string ScheduleEntry::code() const {
  auto colon = task.find(':');
  return colon == std::string::npos ? task : task.substr(0, colon);
}

std::string ScheduleEntry::travel_from() const {
  auto a = task.find(':');
  auto b = task.rfind(':');
  if (a == std::string::npos || b == a)
    throw std::invalid_argument("malformed travel task: " + task);
  return task.substr(a + 1, b - a - 1);
}

std::string ScheduleEntry::travel_to() const {
  auto b = task.rfind(':');
  if (b == std::string::npos) throw std::invalid_argument("malformed travel task: " + task);
  return task.substr(b + 1);
}

std::string ScheduleEntry::arrive_location() const {
  auto a = task.find(':');
  if (a == std::string::npos) throw std::invalid_argument("malformed arrive task: " + task);
  return task.substr(a + 1);
}

Scenario builtin_thanksgiving(bool augmented, bool delayed) {
  Scenario s;
  s.locations = {"home", "airport", "grandma"};
  auto link = [&](const std::string& a, const std::string& b, Minute mins) {
    s.travel[a][b] = mins;
    s.travel[b][a] = mins;
  };
  link("home", "airport", 60);
  link("airport", "grandma", 60);
  link("home", "grandma", 30);

  s.actors = {
      {"sarah", true,
       {"cook", "drive", "airport_navigation", "local_navigation", "oven_watch",
        "supervision"},
       "home", 600},
      {"james", true, {"drive", "airport_navigation", "local_navigation"}, "", 0},
      {"emily", false, {"kitchen_help"}, "", 0},
      {"michael", true, {"drive", "airport_navigation", "local_navigation"}, "", 0},
      {"grandma", false, {"cook", "oven_watch", "supervision"}, "grandma", 600},
  };

  s.flights["james"] = delayed ? parse_minute("16:00") : parse_minute("13:00");
  s.flights["emily"] = parse_minute("14:30");
  s.road_arrivals["michael"] = {"home", parse_minute("15:00")};
  s.rental_flyers = {"james"};

  // Flyers become taskable at landing; Michael at his road ETA.
  for (auto& a : s.actors) {
    auto f = s.flights.find(a.id);
    if (f != s.flights.end()) a.available_from = f->second;
    auto r = s.road_arrivals.find(a.id);
    if (r != s.road_arrivals.end()) a.available_from = r->second.minute;
  }

  s.turkey_minutes = 240;
  s.side_dish_minutes = 120;
  s.deadline = parse_minute("18:00");
  s.start_minute = parse_minute("10:00");  // detection time for delayed runs
  s.augmented = augmented;
  s.delayed = delayed;

  if (augmented) {
    s.soft_preferences.push_back(
        {"R10", {{"passenger", "grandma"}, {"preferred_driver", "michael"}}, 2});
    s.soft_preferences.push_back(
        {"R11", {{"cook_a", "sarah"}, {"cook_b", "grandma"}}, 1});
  }
  return s;
}

std::optional<Scenario> builtin_scenario(const std::string& name) {
  if (name == "thanksgiving") return builtin_thanksgiving(false, false);
  if (name == "thanksgiving-augmented") return builtin_thanksgiving(true, false);
  if (name == "thanksgiving-delayed") return builtin_thanksgiving(false, true);
  if (name == "thanksgiving-augmented-delayed") return builtin_thanksgiving(true, true);
  return std::nullopt;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

Schedule parse_schedule_csv(const std::string& text) {
  Schedule sched;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto cols = split(line, ',');
    if (cols.size() != 4)
      throw std::runtime_error("schedule csv line " + std::to_string(lineno) +
                               ": expected 4 columns");
    if (lineno == 1 && trim(cols[0]) == "start") continue;  // header row
    ScheduleEntry e;
    try {
      e.start = parse_minute(trim(cols[0]));
      e.end = parse_minute(trim(cols[1]));
    } catch (const std::exception& ex) {
      throw std::runtime_error("schedule csv line " + std::to_string(lineno) + ": " +
                               ex.what());
    }
    e.task = trim(cols[2]);
    for (const auto& a : split(trim(cols[3]), ';')) {
      auto t = trim(a);
      if (!t.empty()) e.assignees.push_back(t);
    }
    if (e.end < e.start)
      throw std::runtime_error("schedule csv line " + std::to_string(lineno) +
                               ": end before start");
    sched.entries.push_back(std::move(e));
  }
  return sched;
}

Schedule load_schedule_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open schedule file: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_schedule_csv(buf.str());
}

std::string schedule_to_csv(const Schedule& s) {
  std::ostringstream out;
  out << "start,end,task,assignees\n";
  for (const auto& e : s.entries) {
    out << format_minute(e.start) << "," << format_minute(e.end) << "," << e.task
        << ",";
    for (size_t i = 0; i < e.assignees.size(); ++i) {
      if (i) out << ";";
      out << e.assignees[i];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace maci

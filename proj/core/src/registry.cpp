#include "maci/registry.hpp"

#include <algorithm>
#include <stdexcept>

#include "maci/planner.hpp"
#include "maci/tsp.hpp"

namespace maci {

std::string to_string(MessageType t) {
  switch (t) {
    case MessageType::hello: return "hello";
    case MessageType::task: return "task";
    case MessageType::response: return "response";
    case MessageType::error: return "error";
  }
  return "?";
}

MessageType message_type_from_string(const std::string& text) {
  if (text == "hello") return MessageType::hello;
  if (text == "task") return MessageType::task;
  if (text == "response") return MessageType::response;
  if (text == "error") return MessageType::error;
  throw std::invalid_argument("unknown message_type: " + text);
}

AgentRegistry::AgentRegistry(std::shared_ptr<TextGenerator> generator)
    : generator_(std::move(generator)) {
  if (!generator_) generator_ = std::make_shared<MockTextGenerator>();
}

bool AgentRegistry::register_agent(const std::string& agent_id,
                                   const std::vector<std::string>& capabilities) {
  if (agent_id.empty()) throw std::invalid_argument("agent_id must be non-empty");
  std::lock_guard<std::mutex> lock(mu_);
  return agents_.emplace(agent_id, AgentRecord{agent_id, capabilities, false})
      .second;
}

bool AgentRegistry::register_bridge(const std::string& agent_id) {
  if (agent_id.empty()) throw std::invalid_argument("agent_id must be non-empty");
  std::lock_guard<std::mutex> lock(mu_);
  return agents_
      .emplace(agent_id, AgentRecord{agent_id, {"plan", "tsp"}, true})
      .second;
}

std::optional<AgentRecord> AgentRegistry::lookup(const std::string& agent_id) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = agents_.find(agent_id);
  if (it == agents_.end()) return std::nullopt;
  return it->second;
}

size_t AgentRegistry::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return agents_.size();
}

namespace {

std::string run_bridge_op(const std::string& content, TextGenerator& generator) {
  if (content == "tsp") {
    auto result = tsp::brute_force(tsp::campus5());
    return "optimal tour length " + std::to_string(result.optimal_length);
  }
  if (content == "plan") {
    auto result = plan(builtin_thanksgiving_problem(true, false));
    if (!result.schedule) return "plan infeasible";
    return "plan feasible, " + std::to_string(result.schedule->entries.size()) +
           " schedule entries";
  }
  return generator.generate(content);
}

}  // namespace

Message AgentRegistry::deliver(const Message& msg) {
  AgentRecord target;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = agents_.find(msg.target_id);
    if (it == agents_.end())
      throw std::out_of_range("agent not found: " + msg.target_id);
    target = it->second;
  }

  Message reply;
  reply.source_id = msg.target_id;
  reply.target_id = msg.source_id;
  reply.priority = msg.priority;

  switch (msg.message_type) {
    case MessageType::hello:
      reply.message_type = MessageType::response;
      reply.content = "Hello " + msg.source_id + ", I am " + msg.target_id;
      return reply;
    case MessageType::task:
      if (target.handles_tasks) {
        reply.message_type = MessageType::response;
        reply.content = run_bridge_op(msg.content, *generator_);
        return reply;
      }
      [[fallthrough]];
    default:
      reply.message_type = MessageType::error;
      reply.content = "Unsupported message type: " + to_string(msg.message_type);
      return reply;
  }
}

std::vector<Message> AgentRegistry::route_priority(std::vector<Message> queue) {
  std::stable_sort(queue.begin(), queue.end(),
                   [](const Message& a, const Message& b) {
                     return a.priority > b.priority;
                   });
  return queue;
}

}  // namespace maci

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace maci {

enum class MessageType { hello, task, response, error };

std::string to_string(MessageType t);
// Throws std::invalid_argument for a string outside the closed enum.
MessageType message_type_from_string(const std::string& text);

struct Message {
  std::string source_id;
  std::string target_id;
  MessageType message_type = MessageType::hello;
  std::string content;
  int priority = 1;
};

// Pluggable response generator; the default mock always replies the same.
struct TextGenerator {
  virtual ~TextGenerator() = default;
  virtual std::string generate(const std::string& prompt) = 0;
};

struct MockTextGenerator final : TextGenerator {
  std::string generate(const std::string&) override { return "mock response"; }
};

struct AgentRecord {
  std::string agent_id;
  std::vector<std::string> capabilities;
  bool handles_tasks = false;  // greeter stubs answer hello only
};

// In-memory agent directory with serialized mutation and per-message delivery.
// Plain registered agents are greeters: hello gets "Hello <source>, I am
// <target>", anything else an error-type reply. A bridge agent additionally
// accepts task messages and runs the named engine operation ("tsp" or "plan"
// on the built-in dinner facts); unrecognized task content falls through to
// the text generator.
class AgentRegistry {
 public:
  explicit AgentRegistry(std::shared_ptr<TextGenerator> generator = nullptr);

  // False on duplicate id; throws std::invalid_argument for an empty id.
  bool register_agent(const std::string& agent_id,
                      const std::vector<std::string>& capabilities = {});
  bool register_bridge(const std::string& agent_id);

  std::optional<AgentRecord> lookup(const std::string& agent_id) const;
  size_t size() const;

  // Exactly one reply per message. Throws std::out_of_range for an unknown
  // target; never drops a message silently.
  Message deliver(const Message& msg);

  // Dispatch order: higher priority first, FIFO within a priority level.
  static std::vector<Message> route_priority(std::vector<Message> queue);

 private:
  mutable std::mutex mu_;
  std::map<std::string, AgentRecord> agents_;
  std::shared_ptr<TextGenerator> generator_;
};

}  // namespace maci

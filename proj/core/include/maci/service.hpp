#pragma once

#include <memory>
#include <string>
#include <utility>

#include "maci/registry.hpp"

namespace maci {

// HTTP front end for the agent registry.
//
//   POST /agent/register  {"agent_id": ..., "capabilities": [...]}
//       200 {"status":"registered","agent_id":...}
//       400 duplicate id, 422 malformed body or empty agent_id
//   POST /agent/message   {"source_id","target_id","message_type","content","priority"}
//       200 reply message, 404 unknown target, 422 malformed body
//
// Requests are handled concurrently; registry mutations stay linearizable
// behind the registry's own lock.
class RegistryService {
 public:
  explicit RegistryService(std::shared_ptr<AgentRegistry> registry = nullptr);
  ~RegistryService();

  RegistryService(const RegistryService&) = delete;
  RegistryService& operator=(const RegistryService&) = delete;

  // Binds and serves on a background thread. Port 0 picks a free port;
  // returns false if the bind fails.
  bool start(const std::string& host, int port);
  // Serves on the calling thread until stop() (for the CLI's serve mode).
  bool run(const std::string& host, int port);
  void stop();

  int port() const;  // actual bound port, 0 before start
  AgentRegistry& registry();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// "host:port" from a bind string, defaulting to 127.0.0.1:8080; a bare
// ":8081" keeps the default host. Throws std::invalid_argument on a
// non-numeric port.
std::pair<std::string, int> parse_bind(const std::string& bind);

}  // namespace maci

#include "maci/service.hpp"

#include <stdexcept>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace maci {

using nlohmann::json;

struct RegistryService::Impl {
  std::shared_ptr<AgentRegistry> registry;
  httplib::Server server;
  std::thread worker;
  int port = 0;

  void wire_routes() {
    server.Post("/agent/register", [this](const httplib::Request& req,
                                          httplib::Response& res) {
      json body = json::parse(req.body, nullptr, false);
      if (body.is_discarded() || !body.is_object()) {
        res.status = 422;
        res.set_content(json{{"error", "malformed registration body"}}.dump(),
                        "application/json");
        return;
      }
      std::string agent_id = body.value("agent_id", std::string{});
      if (agent_id.empty()) {
        res.status = 422;
        res.set_content(json{{"error", "agent_id must be non-empty"}}.dump(),
                        "application/json");
        return;
      }
      std::vector<std::string> capabilities;
      if (body.contains("capabilities"))
        for (const auto& c : body["capabilities"])
          capabilities.push_back(c.get<std::string>());
      if (!registry->register_agent(agent_id, capabilities)) {
        res.status = 400;
        res.set_content(
            json{{"error", "duplicate agent registration"}, {"agent_id", agent_id}}
                .dump(),
            "application/json");
        return;
      }
      res.status = 200;
      res.set_content(
          json{{"status", "registered"}, {"agent_id", agent_id}}.dump(),
          "application/json");
    });

    server.Post("/agent/message", [this](const httplib::Request& req,
                                         httplib::Response& res) {
      json body = json::parse(req.body, nullptr, false);
      if (body.is_discarded() || !body.is_object()) {
        res.status = 422;
        res.set_content(json{{"error", "malformed message body"}}.dump(),
                        "application/json");
        return;
      }
      Message msg;
      try {
        msg.source_id = body.value("source_id", std::string{});
        msg.target_id = body.at("target_id").get<std::string>();
        msg.message_type =
            message_type_from_string(body.value("message_type", "hello"));
        if (body.contains("content") && body["content"].is_string())
          msg.content = body["content"].get<std::string>();
        else if (body.contains("content"))
          msg.content = body["content"].dump();
        msg.priority = body.value("priority", 1);
      } catch (const std::exception& e) {
        res.status = 422;
        res.set_content(json{{"error", e.what()}}.dump(), "application/json");
        return;
      }
      try {
        Message reply = registry->deliver(msg);
        res.status = 200;
        res.set_content(json{{"source_id", reply.source_id},
                             {"target_id", reply.target_id},
                             {"message_type", to_string(reply.message_type)},
                             {"content", reply.content},
                             {"priority", reply.priority}}
                            .dump(),
                        "application/json");
      } catch (const std::out_of_range& e) {
        res.status = 404;
        res.set_content(json{{"error", e.what()}}.dump(), "application/json");
      }
    });
  }
};

RegistryService::RegistryService(std::shared_ptr<AgentRegistry> registry)
    : impl_(std::make_unique<Impl>()) {
  impl_->registry =
      registry ? std::move(registry) : std::make_shared<AgentRegistry>();
  impl_->wire_routes();
}

RegistryService::~RegistryService() { stop(); }

bool RegistryService::start(const std::string& host, int port) {
  if (port == 0) {
    impl_->port = impl_->server.bind_to_any_port(host);
    if (impl_->port <= 0) return false;
  } else {
    if (!impl_->server.bind_to_port(host, port)) return false;
    impl_->port = port;
  }
  impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return true;
}

bool RegistryService::run(const std::string& host, int port) {
  impl_->port = port;
  return impl_->server.listen(host, port);
}

void RegistryService::stop() {
  impl_->server.stop();
  if (impl_->worker.joinable()) impl_->worker.join();
}

int RegistryService::port() const { return impl_->port; }

AgentRegistry& RegistryService::registry() { return *impl_->registry; }

std::pair<std::string, int> parse_bind(const std::string& bind) {
  std::string host = "127.0.0.1";
  int port = 8080;
  if (bind.empty()) return {host, port};
  auto colon = bind.rfind(':');
  if (colon == std::string::npos) {
    host = bind;
    return {host, port};
  }
  if (colon > 0) host = bind.substr(0, colon);
  std::string port_text = bind.substr(colon + 1);
  if (port_text.empty()) return {host, port};
  try {
    size_t used = 0;
    port = std::stoi(port_text, &used);
    if (used != port_text.size()) throw std::invalid_argument(port_text);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad port in bind address: " + bind);
  }
  return {host, port};
}

}  // namespace maci

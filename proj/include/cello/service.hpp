#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include <json.hpp>

#include "cello/chat.hpp"

namespace httplib {
class Server;
}

namespace cello {

struct ServiceOptions {
  SessionConfig session_defaults;
  std::chrono::seconds idle_timeout{std::chrono::minutes(30)};
  std::optional<std::filesystem::path> static_dir;  // served at "/" when set
};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

// Chat sessions behind the /api endpoints. The handler methods are usable without a socket;
// start() puts them behind an HTTP listener.
class ChatService {
 public:
  using Clock = std::function<std::chrono::steady_clock::time_point()>;

  ChatService(const CelloRetriever* retriever, LlmClient& llm, ServiceOptions options = {}, Clock clock = {});
  ~ChatService();

  ChatService(const ChatService&) = delete;
  ChatService& operator=(const ChatService&) = delete;

  ApiResponse create_session();
  ApiResponse chat(std::string_view request_body);
  ApiResponse get_session(const std::string& id);
  ApiResponse get_context(const std::string& id, std::size_t turn);
  ApiResponse health();

  // Drops sessions idle for longer than the configured timeout; returns how many.
  std::size_t expire_idle();
  std::size_t session_count() const;

  // Binds and serves on a background thread. Port 0 picks a free port. Throws TransportError
  // when the address cannot be bound.
  int start(const std::string& host, int port);
  // Same, but serves on the calling thread until stop().
  void run(const std::string& host, int port);
  void stop();

 private:
  struct Entry {
    std::mutex mutex;
    ChatSession session;
    std::chrono::steady_clock::time_point last_used;

    Entry(std::string id, SessionConfig config) : session(std::move(id), std::move(config)) {}
  };

  std::shared_ptr<Entry> lookup(const std::string& id);
  std::string new_id();
  int bind(const std::string& host, int port);

  const CelloRetriever* retriever_;
  LlmClient& llm_;
  ServiceOptions options_;
  Clock clock_;

  mutable std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t id_state_;

  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace cello

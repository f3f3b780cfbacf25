#include "cello/service.hpp"

#include <random>

#include <httplib.h>

#include "cello/error.hpp"
#include "cello/hash.hpp"

namespace cello {

namespace {

ApiResponse error_response(int status, const std::string& message) { return {status, {{"error", message}}}; }

// Snippets come from the live collections; a chunk that has since disappeared gets none.
nlohmann::json refs_json(const std::vector<ContextRef>& refs, const VectorCollection* collection) {
  auto a = nlohmann::json::array();
  for (const auto& r : refs) {
    nlohmann::json j = {{"path", r.path}, {"chunk_id", r.chunk_id}};
    if (collection)
      if (const auto entry = collection->find(r.chunk_id)) j["snippet"] = entry->text;
    a.push_back(std::move(j));
  }
  return a;
}

nlohmann::json context_json(const TurnContext& c, const CelloRetriever* retriever) {
  return {{"code", refs_json(c.code, retriever ? &retriever->code() : nullptr)},
          {"text", refs_json(c.text, retriever ? &retriever->text() : nullptr)},
          {"lineage", c.lineage}};
}

std::optional<std::size_t> read_count(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_number_unsigned()) throw InputError(std::string(key) + " must be a non-negative integer");
  return j[key].get<std::size_t>();
}

void reply(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  res.set_content(api.body.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace),
                  "application/json; charset=utf-8");
}

}  // namespace

ChatService::ChatService(const CelloRetriever* retriever, LlmClient& llm, ServiceOptions options, Clock clock)
    : retriever_(retriever), llm_(llm), options_(std::move(options)), clock_(std::move(clock)) {
  if (!clock_) clock_ = [] { return std::chrono::steady_clock::now(); };
  std::random_device rd;
  id_state_ = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  if (retriever_ && options_.session_defaults.embedder.empty())
    options_.session_defaults.embedder = retriever_->code().provider().name();
}

ChatService::~ChatService() { stop(); }

std::string ChatService::new_id() {
  // caller holds sessions_mutex_
  id_state_ = fnv1a64(std::to_string(id_state_), id_state_ ^ kFnvOffset);
  return to_hex(id_state_);
}

std::shared_ptr<ChatService::Entry> ChatService::lookup(const std::string& id) {
  std::lock_guard lock(sessions_mutex_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

ApiResponse ChatService::create_session() {
  expire_idle();
  std::lock_guard lock(sessions_mutex_);
  std::string id;
  do id = new_id();
  while (sessions_.count(id));
  auto entry = std::make_shared<Entry>(id, options_.session_defaults);
  entry->last_used = clock_();
  sessions_.emplace(id, std::move(entry));
  return {200, {{"session_id", id}}};
}

ApiResponse ChatService::chat(std::string_view request_body) {
  expire_idle();
  nlohmann::json req;
  try {
    req = nlohmann::json::parse(request_body);
  } catch (const nlohmann::json::parse_error&) {
    return error_response(400, "request body is not JSON");
  }
  if (!req.is_object() || !req.contains("session_id") || !req["session_id"].is_string())
    return error_response(400, "session_id is required");
  if (!req.contains("message") || !req["message"].is_string() || req["message"].get<std::string>().empty())
    return error_response(400, "message is required");

  TurnOverrides overrides;
  try {
    if (req.contains("lineage") && !req["lineage"].is_null()) {
      if (!req["lineage"].is_boolean()) throw InputError("lineage must be a boolean");
      overrides.lineage = req["lineage"].get<bool>();
    }
    overrides.code_k = read_count(req, "code_k");
    overrides.text_k = read_count(req, "text_k");
  } catch (const InputError& e) {
    return error_response(400, e.what());
  }

  const auto id = req["session_id"].get<std::string>();
  auto entry = lookup(id);
  if (!entry) return error_response(404, "unknown session " + id);

  std::lock_guard lock(entry->mutex);
  entry->last_used = clock_();
  try {
    auto result = chat_turn(entry->session, req["message"].get<std::string>(), retriever_, llm_, overrides);
    entry->last_used = clock_();
    const auto& turn = entry->session.turns().back();
    return {200,
            {{"reply", result.reply},
             {"turn", entry->session.turns().size() - 1},
             {"context", context_json(turn.context, retriever_)},
             {"warnings", result.warnings}}};
  } catch (const TransportError& e) {
    return error_response(502, std::string("model unavailable: ") + e.what());
  } catch (const ProtocolError& e) {
    return error_response(502, std::string("model reply unusable: ") + e.what());
  } catch (const std::exception& e) {
    return error_response(500, e.what());
  }
}

ApiResponse ChatService::get_session(const std::string& id) {
  expire_idle();
  auto entry = lookup(id);
  if (!entry) return error_response(404, "unknown session " + id);
  std::lock_guard lock(entry->mutex);
  entry->last_used = clock_();
  return {200, entry->session.transcript()};
}

ApiResponse ChatService::get_context(const std::string& id, std::size_t turn) {
  expire_idle();
  auto entry = lookup(id);
  if (!entry) return error_response(404, "unknown session " + id);
  std::lock_guard lock(entry->mutex);
  entry->last_used = clock_();
  const auto& turns = entry->session.turns();
  if (turn >= turns.size()) return error_response(404, "session " + id + " has no turn " + std::to_string(turn));
  const auto& t = turns[turn];
  return {200,
          {{"session_id", id},
           {"turn", turn},
           {"role", t.role},
           {"attached_context_digest", t.context.digest()},
           {"context", context_json(t.context, retriever_)}}};
}

ApiResponse ChatService::health() {
  return {200, {{"status", "ok"}, {"sessions", session_count()}, {"retrieval", retriever_ != nullptr}}};
}

std::size_t ChatService::expire_idle() {
  const auto now = clock_();
  std::lock_guard lock(sessions_mutex_);
  std::size_t removed = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::unique_lock entry_lock(it->second->mutex, std::try_to_lock);
    // a session mid-turn is in use, not idle
    if (entry_lock.owns_lock() && now - it->second->last_used > options_.idle_timeout) {
      entry_lock.unlock();
      it = sessions_.erase(it);
      ++removed;
    } else {
      ++it;
    }
  }
  return removed;
}

std::size_t ChatService::session_count() const {
  std::lock_guard lock(sessions_mutex_);
  return sessions_.size();
}

int ChatService::bind(const std::string& host, int port) {
  if (server_) throw InputError("service already started");
  server_ = std::make_unique<httplib::Server>();
  auto& srv = *server_;
  // httplib also sets SO_REUSEPORT, which would let a second instance share a busy port
  srv.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof(yes));
  });

  srv.Post("/api/session", [this](const httplib::Request&, httplib::Response& res) { reply(res, create_session()); });
  srv.Post("/api/chat", [this](const httplib::Request& req, httplib::Response& res) { reply(res, chat(req.body)); });
  srv.Get(R"(/api/session/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, get_session(req.matches[1]));
  });
  srv.Get(R"(/api/context/(\d+))", [this](const httplib::Request& req, httplib::Response& res) {
    if (!req.has_param("session_id")) return reply(res, error_response(400, "session_id query parameter is required"));
    std::size_t turn = 0;
    try {
      turn = std::stoull(req.matches[1]);
    } catch (const std::exception&) {
      return reply(res, error_response(404, "no such turn"));
    }
    reply(res, get_context(req.get_param_value("session_id"), turn));
  });
  srv.Get("/api/health", [this](const httplib::Request&, httplib::Response& res) { reply(res, health()); });
  if (options_.static_dir && !srv.set_mount_point("/", options_.static_dir->string()))
    throw InputError("static directory not found: " + options_.static_dir->string());

  int bound = port;
  if (port == 0) {
    bound = srv.bind_to_any_port(host);
    if (bound < 0) bound = 0;
  } else if (!srv.bind_to_port(host, port)) {
    bound = 0;
  }
  if (bound <= 0) {
    server_.reset();
    throw TransportError("cannot bind " + host + ":" + std::to_string(port) + " (address in use?)");
  }
  return bound;
}

int ChatService::start(const std::string& host, int port) {
  const int bound = bind(host, port);
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return bound;
}

void ChatService::run(const std::string& host, int port) {
  bind(host, port);
  server_->listen_after_bind();
}

void ChatService::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace cello

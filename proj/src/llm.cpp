#include "cello/llm.hpp"

#include <fstream>
#include <thread>

#include <httplib.h>

#include "cello/embedding.hpp"
#include "cello/error.hpp"

namespace cello {

nlohmann::json to_json(const LlmRequest& r) {
  nlohmann::json messages = nlohmann::json::array();
  for (const auto& m : r.messages) messages.push_back({{"role", m.role}, {"content", m.content}});
  return {{"model", r.model}, {"messages", messages}, {"temperature", r.temperature}, {"max_tokens", r.max_tokens}};
}

nlohmann::json to_json(const LlmResponse& r) {
  return {{"content", r.content},
          {"finish_reason", r.finish_reason},
          {"usage", {{"prompt_tokens", r.usage.prompt_tokens}, {"completion_tokens", r.usage.completion_tokens}}}};
}

LlmResponse parse_completion(std::string_view body) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error&) {
    throw ProtocolError("completion endpoint returned non-JSON body");
  }
  try {
    const auto& choice = j.at("choices").at(0);
    LlmResponse r;
    r.content = choice.at("message").at("content").get<std::string>();
    if (choice.contains("finish_reason") && choice["finish_reason"].is_string())
      r.finish_reason = choice["finish_reason"].get<std::string>();
    if (j.contains("usage") && j["usage"].is_object()) {
      r.usage.prompt_tokens = j["usage"].value("prompt_tokens", 0);
      r.usage.completion_tokens = j["usage"].value("completion_tokens", 0);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ProtocolError(std::string("unexpected completion shape: ") + e.what());
  }
}

HttpLlmClient::HttpLlmClient(std::string url, RetryPolicy retry, std::chrono::milliseconds timeout,
                             std::optional<std::filesystem::path> audit_log)
    : url_(std::move(url)), retry_(retry), timeout_(timeout), audit_log_(std::move(audit_log)) {}

void HttpLlmClient::audit(const nlohmann::json& request, const nlohmann::json& outcome) {
  if (!audit_log_) return;
  std::lock_guard lock(audit_mutex_);
  std::ofstream out(*audit_log_, std::ios::app | std::ios::binary);
  out << nlohmann::json{{"request", request}, {"response", outcome}}.dump(
             -1, ' ', false, nlohmann::json::error_handler_t::replace)
      << '\n';
}

LlmResponse HttpLlmClient::complete(const LlmRequest& request) {
  const auto [origin, path] = split_url(url_);
  const auto body = to_json(request);
  const auto payload = body.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
  auto backoff = retry_.initial_backoff;
  std::string last_error;

  for (int attempt = 0; attempt <= retry_.retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(backoff);
      backoff = std::chrono::milliseconds(static_cast<long long>(static_cast<double>(backoff.count()) * retry_.multiplier));
    }
    httplib::Client client(origin);
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout_);
    const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(timeout_ - secs);
    client.set_connection_timeout(secs.count(), usecs.count());
    client.set_read_timeout(secs.count(), usecs.count());
    client.set_write_timeout(secs.count(), usecs.count());

    const auto res = client.Post(path, payload, "application/json");
    if (!res) {
      last_error = "transport: " + httplib::to_string(res.error());
      audit(body, {{"error", last_error}, {"attempt", attempt}});
      continue;
    }
    if (res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
      audit(body, {{"error", last_error}, {"attempt", attempt}});
      continue;
    }
    if (res->status != 200) {
      audit(body, {{"error", "HTTP " + std::to_string(res->status)}, {"attempt", attempt}});
      throw ProtocolError("completion endpoint returned HTTP " + std::to_string(res->status));
    }
    try {
      auto parsed = parse_completion(res->body);
      audit(body, to_json(parsed));
      return parsed;
    } catch (const ProtocolError& e) {
      audit(body, {{"error", e.what()}, {"attempt", attempt}});
      throw;
    }
  }
  throw TransportError("completion endpoint " + url_ + " failed after " + std::to_string(retry_.retries + 1) +
                       " attempts: " + last_error);
}

LlmResponse ScriptedLlm::complete(const LlmRequest& request) {
  std::lock_guard lock(mutex_);
  requests_.push_back(request);
  std::string reply;
  if (responder_) {
    reply = responder_(request);
  } else {
    if (!replies_.empty()) {
      last_ = replies_.front();
      replies_.pop_front();
    }
    reply = last_;
  }
  return {reply, "stop", {0, 0}};
}

std::vector<LlmRequest> ScriptedLlm::requests() const {
  std::lock_guard lock(mutex_);
  return requests_;
}

}  // namespace cello

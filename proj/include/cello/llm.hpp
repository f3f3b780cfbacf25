#pragma once

#include <chrono>
#include <deque>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cello {

struct ChatMessage {
  std::string role;  // "system", "user" or "assistant"
  std::string content;

  friend bool operator==(const ChatMessage&, const ChatMessage&) = default;
};

struct LlmRequest {
  std::string model;
  std::vector<ChatMessage> messages;
  double temperature = 0.2;
  int max_tokens = 2048;
};

struct TokenUsage {
  int prompt_tokens = 0;
  int completion_tokens = 0;
};

struct LlmResponse {
  std::string content;
  std::string finish_reason;
  TokenUsage usage;
};

nlohmann::json to_json(const LlmRequest& request);
nlohmann::json to_json(const LlmResponse& response);

// Parses a chat-completion reply: {choices: [{message: {content}, finish_reason}], usage}.
// Throws ProtocolError on anything else.
LlmResponse parse_completion(std::string_view body);

class LlmClient {
 public:
  virtual ~LlmClient() = default;
  virtual LlmResponse complete(const LlmRequest& request) = 0;
};

struct RetryPolicy {
  int retries = 3;  // extra attempts after the first
  std::chrono::milliseconds initial_backoff{250};
  double multiplier = 2.0;
};

// JSON chat-completion client for a local inference server. Connection failures, timeouts
// and HTTP 5xx are retried with exponential backoff; each attempt is appended to the audit
// log (JSON lines) when one is configured.
class HttpLlmClient final : public LlmClient {
 public:
  explicit HttpLlmClient(std::string url, RetryPolicy retry = {},
                         std::chrono::milliseconds timeout = std::chrono::minutes(5),
                         std::optional<std::filesystem::path> audit_log = std::nullopt);

  LlmResponse complete(const LlmRequest& request) override;

 private:
  void audit(const nlohmann::json& request, const nlohmann::json& outcome);

  std::string url_;
  RetryPolicy retry_;
  std::chrono::milliseconds timeout_;
  std::optional<std::filesystem::path> audit_log_;
  std::mutex audit_mutex_;
};

// Deterministic stand-in for a model. Replies come from `responder` when set, otherwise from
// the queued replies (the last one repeats once the queue is exhausted). Every request is kept.
class ScriptedLlm final : public LlmClient {
 public:
  using Responder = std::function<std::string(const LlmRequest&)>;

  ScriptedLlm() = default;
  explicit ScriptedLlm(Responder responder) : responder_(std::move(responder)) {}
  explicit ScriptedLlm(std::vector<std::string> replies) : replies_(replies.begin(), replies.end()) {}

  LlmResponse complete(const LlmRequest& request) override;

  std::vector<LlmRequest> requests() const;

 private:
  Responder responder_;
  std::deque<std::string> replies_;
  std::string last_;
  mutable std::mutex mutex_;
  std::vector<LlmRequest> requests_;
};

}  // namespace cello

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cello/kernels.hpp"
#include "cello/llm.hpp"
#include "cello/retriever.hpp"

namespace cello {

struct ContextRef {
  std::string path;
  std::string chunk_id;

  friend bool operator==(const ContextRef&, const ContextRef&) = default;
};

// What an assistant turn was answered with.
struct TurnContext {
  std::vector<ContextRef> code;
  std::vector<ContextRef> text;
  std::vector<std::string> lineage;

  std::vector<std::string> digest() const;  // chunk ids, code then text
  static TurnContext from(const AssembledContext& context);
  friend bool operator==(const TurnContext&, const TurnContext&) = default;
};

struct ChatTurn {
  std::string role;  // "system", "user" or "assistant"
  std::string content;
  TurnContext context;                // assistant turns only
  std::vector<std::string> warnings;  // assistant turns only

  friend bool operator==(const ChatTurn&, const ChatTurn&) = default;
};

struct SessionConfig {
  RetrieverConfig retriever;
  std::string embedder;  // provider name, recorded for the transcript
  std::string model = "local";
  double temperature = 0.2;
  int max_tokens = 2048;
  std::size_t context_budget_tokens = 8192;  // estimated at 4 bytes per token
  std::optional<std::string> system_prompt;

  nlohmann::json to_json() const;
};

class ChatSession {
 public:
  explicit ChatSession(std::string id, SessionConfig config = {});

  const std::string& id() const { return id_; }
  const SessionConfig& config() const { return config_; }
  const std::vector<ChatTurn>& turns() const { return turns_; }

  // Appends after checking role order: optional leading system turn, then user/assistant
  // alternating. Throws InputError otherwise.
  void append(ChatTurn turn);

  // Running hash over every appended turn; unchanged unless a turn is appended.
  std::uint64_t chain() const { return chain_; }
  std::size_t exchanges() const;

  nlohmann::json transcript() const;

 private:
  std::string id_;
  SessionConfig config_;
  std::vector<ChatTurn> turns_;
  std::uint64_t chain_;
};

std::uint64_t chain_step(std::uint64_t previous, const ChatTurn& turn);

struct TurnOverrides {
  std::optional<bool> lineage;
  std::optional<std::size_t> code_k;
  std::optional<std::size_t> text_k;
};

struct TurnResult {
  std::string reply;
  AssembledContext context;
  std::vector<std::string> warnings;
  std::size_t dropped_turns = 0;  // history turns left out to fit the budget
};

// Retrieves for `user_message` (unless `retriever` is null), renders the prompt, sends history
// plus the prompt to `llm`, then appends the user and assistant turns. If the LLM call throws,
// the session is left untouched and the exception propagates. A failing retriever degrades to
// a context-free prompt and records a warning.
TurnResult chat_turn(ChatSession& session, const std::string& user_message, const CelloRetriever* retriever,
                     LlmClient& llm, const TurnOverrides& overrides = {});

// Messages for the next request. History is trimmed oldest-first, a user/assistant pair at a
// time, until the estimate fits; the system turn and `prompt` are always kept.
std::vector<ChatMessage> build_messages(const ChatSession& session, const std::string& prompt,
                                        std::size_t* dropped = nullptr);

struct TaskTemplate {
  std::string name;
  std::string body;
};

TaskTemplate collect_kernels_template();
TaskTemplate port_kernels_template();
// Throws NotFoundError for names other than collect_kernels and port_kernels.
TaskTemplate task_template(std::string_view name);

// Placeholders are {UPPER_CASE} names. Throws TemplateError "<NAME> unbound" for the first
// placeholder without a binding; bound values are inserted literally.
std::string render_task_template(const TaskTemplate& tmpl, const std::map<std::string, std::string>& bindings);

// BASE_IMPL, IDENTIFIER and PORT_IMPL for a source programming model, plus NAME.
std::map<std::string, std::string> task_bindings(Paradigm base, const std::string& codebase);

}  // namespace cello

#include "cello/chat.hpp"

#include "cello/error.hpp"
#include "cello/hash.hpp"

namespace cello {

namespace {

constexpr char kSep = '\x1f';

std::size_t estimate_tokens(const std::vector<ChatMessage>& messages) {
  std::size_t bytes = 0;
  for (const auto& m : messages) bytes += m.content.size();
  return (bytes + 3) / 4;
}

nlohmann::json refs_json(const std::vector<ContextRef>& refs) {
  auto a = nlohmann::json::array();
  for (const auto& r : refs) a.push_back({{"path", r.path}, {"chunk_id", r.chunk_id}});
  return a;
}

constexpr std::string_view kCollectKernels =
    "Task: kernel inventory for {NAME}, written with {BASE_IMPL}.\n"
    "\n"
    "Report every GPU entry point defined in the sources, that is every function marked with {IDENTIFIER}.\n"
    "Format: a markdown table titled Table 1 with the columns `function` and `file`, one row per function.\n"
    "Stop after the table. A later turn plans the move to {PORT_IMPL}; to prepare for it, tag each row with "
    "what the function does among host/device copies, buffer setup, arithmetic and reductions. "
    "No code in this reply.\n";

constexpr std::string_view kPortKernels =
    "Task: port the {BASE_IMPL} kernels of {NAME} listed in Table 1 (marked with {IDENTIFIER}) to {PORT_IMPL}, "
    "following the plan from the previous turn.\n"
    "\n"
    "Requirements:\n"
    "- one {PORT_IMPL} version per listed function, buildable with the project's CMake files;\n"
    "- double-precision results identical to the original wherever the target allows;\n"
    "- explicit device buffers where {BASE_IMPL} managed data implicitly, allocated once and reused across "
    "event batches;\n"
    "- {PORT_IMPL} constructs with good performance on recent GPUs.\n"
    "Close each kernel with two sentences on expected speed-up and occupancy limits.\n";

bool placeholder_char(char c) { return (c >= 'A' && c <= 'Z') || c == '_'; }

}  // namespace

std::vector<std::string> TurnContext::digest() const {
  std::vector<std::string> ids;
  for (const auto& r : code) ids.push_back(r.chunk_id);
  for (const auto& r : text) ids.push_back(r.chunk_id);
  return ids;
}

TurnContext TurnContext::from(const AssembledContext& context) {
  TurnContext t;
  for (const auto& h : context.code_hits) t.code.push_back({h.path(), h.hit.chunk_id});
  for (const auto& h : context.text_hits) t.text.push_back({h.path(), h.hit.chunk_id});
  t.lineage = context.lineage_notes;
  return t;
}

nlohmann::json SessionConfig::to_json() const {
  nlohmann::json j = retriever.to_json();
  j["embedder"] = embedder;
  j["model"] = model;
  j["temperature"] = temperature;
  j["max_tokens"] = max_tokens;
  j["context_budget_tokens"] = context_budget_tokens;
  return j;
}

std::uint64_t chain_step(std::uint64_t previous, const ChatTurn& turn) {
  std::string record = turn.role;
  record += kSep;
  record += turn.content;
  for (const auto& id : turn.context.digest()) {
    record += kSep;
    record += id;
  }
  return fnv1a64(record, previous);
}

ChatSession::ChatSession(std::string id, SessionConfig config)
    : id_(std::move(id)), config_(std::move(config)), chain_(fnv1a64(id_)) {
  if (config_.system_prompt) append({"system", *config_.system_prompt, {}, {}});
}

void ChatSession::append(ChatTurn turn) {
  std::string expected;
  if (turns_.empty() || turns_.back().role == "system" || turns_.back().role == "assistant")
    expected = "user";
  else
    expected = "assistant";
  const bool leading_system = turn.role == "system" && turns_.empty();
  if (!leading_system && turn.role != expected)
    throw InputError("session " + id_ + ": expected a " + expected + " turn, got " + turn.role);
  chain_ = chain_step(chain_, turn);
  turns_.push_back(std::move(turn));
}

std::size_t ChatSession::exchanges() const {
  std::size_t n = 0;
  for (const auto& t : turns_) n += t.role == "assistant";
  return n;
}

nlohmann::json ChatSession::transcript() const {
  auto turns = nlohmann::json::array();
  for (const auto& t : turns_) {
    nlohmann::json j = {{"role", t.role}, {"content", t.content}, {"attached_context_digest", t.context.digest()}};
    if (t.role == "assistant") {
      j["context"] = {{"code", refs_json(t.context.code)},
                      {"text", refs_json(t.context.text)},
                      {"lineage", t.context.lineage}};
      j["warnings"] = t.warnings;
    }
    turns.push_back(std::move(j));
  }
  return {{"session_id", id_}, {"config", config_.to_json()}, {"turns", std::move(turns)}, {"chain", to_hex(chain_)}};
}

std::vector<ChatMessage> build_messages(const ChatSession& session, const std::string& prompt, std::size_t* dropped) {
  const auto& turns = session.turns();
  std::vector<ChatMessage> head;
  std::size_t first = 0;
  if (!turns.empty() && turns.front().role == "system") {
    head.push_back({"system", turns.front().content});
    first = 1;
  }
  const ChatMessage current{"user", prompt};
  const std::size_t budget = session.config().context_budget_tokens;

  auto assemble = [&](std::size_t from) {
    auto messages = head;
    for (std::size_t i = from; i < turns.size(); ++i) messages.push_back({turns[i].role, turns[i].content});
    messages.push_back(current);
    return messages;
  };
  std::size_t from = first;
  auto messages = assemble(from);
  while (from < turns.size() && estimate_tokens(messages) > budget) {
    from = std::min(turns.size(), from + 2);
    messages = assemble(from);
  }
  if (dropped) *dropped = from - first;
  return messages;
}

TurnResult chat_turn(ChatSession& session, const std::string& user_message, const CelloRetriever* retriever,
                     LlmClient& llm, const TurnOverrides& overrides) {
  if (user_message.empty()) throw InputError("empty chat message");
  RetrieverConfig config = session.config().retriever;
  if (overrides.lineage) config.enhance_prompt_with_lineage = *overrides.lineage;
  if (overrides.code_k) config.quotas.code_k = *overrides.code_k;
  if (overrides.text_k) config.quotas.text_k = *overrides.text_k;

  TurnResult result;
  result.context.query = user_message;
  if (retriever) {
    try {
      result.context = retriever->run(user_message, config);
    } catch (const std::exception& e) {
      result.warnings.push_back(std::string("retrieval failed, answering without context: ") + e.what());
      result.context = AssembledContext{};
      result.context.query = user_message;
    }
  }

  LlmRequest request;
  request.model = session.config().model;
  request.temperature = session.config().temperature;
  request.max_tokens = session.config().max_tokens;
  request.messages = build_messages(session, render_prompt(result.context), &result.dropped_turns);
  if (result.dropped_turns > 0)
    result.warnings.push_back("left " + std::to_string(result.dropped_turns) +
                              " earlier turns out of the prompt to fit the context budget");

  auto response = llm.complete(request);
  result.reply = response.content;

  session.append({"user", user_message, {}, {}});
  session.append({"assistant", response.content, TurnContext::from(result.context), result.warnings});
  return result;
}

TaskTemplate collect_kernels_template() { return {"collect_kernels", std::string(kCollectKernels)}; }
TaskTemplate port_kernels_template() { return {"port_kernels", std::string(kPortKernels)}; }

TaskTemplate task_template(std::string_view name) {
  if (name == "collect_kernels") return collect_kernels_template();
  if (name == "port_kernels") return port_kernels_template();
  throw NotFoundError("no task template named " + std::string(name));
}

std::string render_task_template(const TaskTemplate& tmpl, const std::map<std::string, std::string>& bindings) {
  const std::string& body = tmpl.body;
  std::string out;
  std::size_t i = 0;
  while (i < body.size()) {
    if (body[i] == '{') {
      std::size_t j = i + 1;
      while (j < body.size() && placeholder_char(body[j])) ++j;
      if (j > i + 1 && j < body.size() && body[j] == '}') {
        const std::string key = body.substr(i + 1, j - i - 1);
        const auto it = bindings.find(key);
        if (it == bindings.end()) throw TemplateError(key + " unbound");
        out += it->second;
        i = j + 1;
        continue;
      }
    }
    out += body[i++];
  }
  return out;
}

std::map<std::string, std::string> task_bindings(Paradigm base, const std::string& codebase) {
  switch (base) {
    case Paradigm::CUDA:
      return {{"BASE_IMPL", "CUDA"}, {"IDENTIFIER", "__global__, __device__"}, {"PORT_IMPL", "OpenMP"}, {"NAME", codebase}};
    case Paradigm::Kokkos:
      return {{"BASE_IMPL", "Kokkos"}, {"IDENTIFIER", "Kokkos::parallel_for"}, {"PORT_IMPL", "CUDA"}, {"NAME", codebase}};
    case Paradigm::OpenMP:
      return {{"BASE_IMPL", "OpenMP"}, {"IDENTIFIER", "pragma omp target"}, {"PORT_IMPL", "CUDA"}, {"NAME", codebase}};
  }
  throw InputError("unknown paradigm");
}

}  // namespace cello

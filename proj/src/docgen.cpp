#include "cello/docgen.hpp"

#include <algorithm>

#include "cello/error.hpp"
#include "cello/syntax.hpp"

namespace cello {

namespace {

constexpr std::string_view kSystemPrompt =
    "You document C, C++, CUDA and HIP code. Reply with the text of a Doxygen comment for the routine "
    "you are given: a one-line @brief, one @param line per parameter and a @return line when the routine "
    "returns a value. Reply with the comment text only, without comment delimiters and without code.";

constexpr std::string_view kSummaryPrompt =
    "You summarize source files of scientific codebases. Reply in markdown with a short overview of the "
    "file's purpose followed by one bullet per routine.";

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  if (from.empty()) return;
  for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
    s.replace(pos, from.size(), to);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string rtrim(std::string_view s) {
  const auto e = s.find_last_not_of(" \t\r");
  return e == std::string_view::npos ? std::string() : std::string(s.substr(0, e + 1));
}

std::string context_snippets(const AssembledContext& context) {
  std::string out;
  for (const auto& h : context.text_hits) {
    out += "// source: " + h.path() + "\n" + h.text;
    if (!h.text.empty() && h.text.back() != '\n') out += '\n';
  }
  return out;
}

}  // namespace

std::string sanitize_generated(std::string_view model_output) {
  std::string s(model_output);
  replace_all(s, "\r\n", "\n");
  replace_all(s, "\r", "\n");
  while (s.find(kWatermark) != std::string::npos) replace_all(s, kWatermark, "");
  replace_all(s, "*/", "*\\/");
  s = trim(s);
  if (s.empty()) throw GenerationError("model returned an empty comment");
  return s;
}

DoxygenComment render_comment(std::string symbol, std::string body) {
  DoxygenComment c;
  c.target_symbol = std::move(symbol);
  c.body = std::move(body);
  std::string r = "/**\n";
  std::size_t pos = 0;
  while (pos <= c.body.size()) {
    auto nl = c.body.find('\n', pos);
    if (nl == std::string::npos) nl = c.body.size();
    const auto line = rtrim(std::string_view(c.body).substr(pos, nl - pos));
    r += line.empty() ? " *\n" : " * " + line + "\n";
    pos = nl + 1;
  }
  r += " * " + c.watermark + "\n */";
  c.rendered = std::move(r);
  return c;
}

std::string routine_signature(std::string_view routine_text) {
  const auto tokens = syntax::tokenize(routine_text);
  for (const auto& t : tokens) {
    if (t.kind == syntax::TokenKind::Punct && t.directive < 0 && routine_text[t.range.begin] == '{')
      return trim(routine_text.substr(0, t.range.begin));
  }
  return trim(routine_text);
}

DoxygenComment document_routine(const Chunk& chunk, const AssembledContext& context, LlmClient& llm,
                                const DocgenOptions& options) {
  if (chunk.kind != ChunkKind::CodeRoutine) throw InputError("document_routine needs a CodeRoutine chunk");
  const std::string symbol = chunk.symbol.value_or("");
  std::string user = "Routine `" + symbol + "` from " + chunk.path + ":\n```\n" + routine_signature(chunk.text) +
                     "\n```\n";
  const auto snippets = context_snippets(context);
  if (!snippets.empty()) user += "\nRelevant documentation:\n" + snippets;

  LlmRequest req;
  req.model = options.model;
  req.temperature = options.temperature;
  req.max_tokens = options.max_tokens;
  req.messages = {{"system", std::string(kSystemPrompt)}, {"user", std::move(user)}};
  const auto reply = llm.complete(req);
  return render_comment(symbol, sanitize_generated(reply.content));
}

std::string insert_comment(std::string_view source, std::size_t routine_start, const DoxygenComment& comment) {
  if (routine_start > source.size()) throw InputError("routine start lies outside the source");

  const auto line_begin = routine_start == 0 ? 0 : source.rfind('\n', routine_start - 1);
  const std::size_t ls = line_begin == std::string_view::npos || routine_start == 0 ? 0 : line_begin + 1;
  std::string indent(source.substr(ls, routine_start - ls));
  if (indent.find_first_not_of(" \t") != std::string::npos) indent.clear();

  std::string block;
  for (const char c : comment.rendered) {
    block += c;
    if (c == '\n') block += indent;
  }
  block += '\n';
  block += indent;

  std::size_t replace_from = routine_start;
  const auto tokens = syntax::tokenize(source.substr(0, routine_start));
  if (!tokens.empty()) {
    const auto& last = tokens.back();
    const auto between = source.substr(last.range.end, routine_start - last.range.end);
    const auto text = source.substr(last.range.begin, last.range.size());
    if (last.kind == syntax::TokenKind::Comment && text.starts_with("/**") &&
        text.find(kWatermark) != std::string_view::npos &&
        between.find_first_not_of(" \t\r\n") == std::string_view::npos) {
      replace_from = last.range.begin;
    }
  }

  std::string out;
  out.reserve(source.size() + block.size());
  out.append(source.substr(0, replace_from));
  out += block;
  out.append(source.substr(routine_start));
  return out;
}

std::string summarize_file(const std::string& path, const std::vector<Chunk>& chunks, const AssembledContext& context,
                           LlmClient& llm, const DocgenOptions& options) {
  std::string header = "# " + path + "\n\n> " + std::string(kWatermark) + "\n\n";
  std::string routines;
  for (const auto& c : chunks) {
    if (c.path != path) continue;
    const bool head = c.kind == ChunkKind::CodeRoutine || (c.kind == ChunkKind::CodeContinuation && c.part_index == 1);
    if (!head) continue;
    routines += "- `" + c.symbol.value_or("<unnamed>") + "`:\n```\n" + routine_signature(c.text) + "\n```\n";
  }
  if (routines.empty()) return header + "No routines found in this file.\n";

  std::string user = "File " + path + " defines these routines:\n" + routines;
  const auto snippets = context_snippets(context);
  if (!snippets.empty()) user += "\nRelevant documentation:\n" + snippets;
  LlmRequest req;
  req.model = options.model;
  req.temperature = options.temperature;
  req.max_tokens = options.max_tokens;
  req.messages = {{"system", std::string(kSummaryPrompt)}, {"user", std::move(user)}};
  auto body = llm.complete(req).content;
  while (body.find(kWatermark) != std::string::npos) replace_all(body, kWatermark, "");
  body = trim(body);
  if (body.empty()) throw GenerationError("model returned an empty summary for " + path);
  return header + body + "\n";
}

std::filesystem::path summary_path(const std::filesystem::path& source_path) {
  auto p = source_path;
  p += ".summary.md";
  return p;
}

DocumentedFile document_source(const std::string& path, std::string_view source, LlmClient& llm,
                               const ContextProvider& context, const DocgenOptions& options) {
  DocumentedFile result;
  const auto tree = syntax::parse(source);
  std::vector<std::pair<std::size_t, DoxygenComment>> edits;
  for (const auto* node : syntax::documentable_definitions(tree)) {
    if (node->error) {
      result.warnings.push_back(path + ": skipping unterminated definition at byte " + std::to_string(node->range.begin));
      continue;
    }
    Chunk chunk;
    chunk.path = path;
    chunk.span = node->range;
    chunk.id = chunk_id(path, node->range);
    chunk.text = std::string(source.substr(node->range.begin, node->range.size()));
    chunk.kind = ChunkKind::CodeRoutine;
    if (!node->qualified.empty()) chunk.symbol = node->qualified;
    try {
      const auto ctx = context ? context(routine_signature(chunk.text)) : AssembledContext{};
      edits.emplace_back(node->range.begin, document_routine(chunk, ctx, llm, options));
    } catch (const GenerationError& e) {
      result.warnings.push_back(path + ": " + chunk.symbol.value_or("<unnamed>") + ": " + e.what());
    }
  }
  std::string out(source);
  for (auto it = edits.rbegin(); it != edits.rend(); ++it) out = insert_comment(out, it->first, it->second);
  for (auto& [_, c] : edits) result.comments.push_back(std::move(c));
  result.source = std::move(out);
  return result;
}

GuardrailReport check_guardrails(std::string_view before, std::string_view after) {
  GuardrailReport r;
  r.errors_before = syntax::parse(before).error_count;
  r.errors_after = syntax::parse(after).error_count;
  r.code_tokens_unchanged =
      syntax::code_tokens(before, syntax::tokenize(before)) == syntax::code_tokens(after, syntax::tokenize(after));
  return r;
}

WatermarkCensus watermark_census(std::string_view source) {
  WatermarkCensus census;
  for (const auto& t : syntax::tokenize(source)) {
    if (t.kind != syntax::TokenKind::Comment) continue;
    const auto text = source.substr(t.range.begin, t.range.size());
    std::size_t n = 0;
    for (auto pos = text.find(kWatermark); pos != std::string_view::npos; pos = text.find(kWatermark, pos + 1)) ++n;
    if (n > 0) ++census.blocks;
    census.occurrences += n;
  }
  return census;
}

}  // namespace cello

#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cello/chunker.hpp"
#include "cello/llm.hpp"
#include "cello/retriever.hpp"

namespace cello {

// Marks every generated block; unique so generated comments can be found and replaced.
inline constexpr std::string_view kWatermark =
    "@note [LLM-generated] Written by an automated documentation pass; verify before trusting.";

struct DoxygenComment {
  std::string target_symbol;
  std::string body;  // sanitized model text
  std::string watermark = std::string(kWatermark);
  std::string rendered;  // "/**\n * ...\n */" without leading indentation
};

struct DocgenOptions {
  std::string model = "local";
  double temperature = 0.2;
  int max_tokens = 1024;
};

// Removes anything that could end the comment early ("*/" -> "*\/") and any copy of the
// watermark, normalizes line endings and trims. Throws GenerationError if nothing is left.
std::string sanitize_generated(std::string_view model_output);

DoxygenComment render_comment(std::string symbol, std::string body);

// Declaration head of a routine: its text up to the opening brace of the body.
std::string routine_signature(std::string_view routine_text);

// Asks the model for a comment on one routine. The prompt carries the signature and the
// text snippets of `context`. Throws InputError for non-routine chunks.
DoxygenComment document_routine(const Chunk& chunk, const AssembledContext& context, LlmClient& llm,
                                const DocgenOptions& options = {});

// Inserts `comment` just before byte `routine_start`, indented like the routine's first line.
// A watermarked block directly above the routine is replaced instead. Throws InputError when
// `routine_start` is past the end of `source`.
std::string insert_comment(std::string_view source, std::size_t routine_start, const DoxygenComment& comment);

// Given everything retrieved for a file, writes a markdown summary headed by the path and the
// watermark. Files without routines get a fixed note and no model call.
std::string summarize_file(const std::string& path, const std::vector<Chunk>& chunks,
                           const AssembledContext& context, LlmClient& llm, const DocgenOptions& options = {});

std::filesystem::path summary_path(const std::filesystem::path& source_path);

using ContextProvider = std::function<AssembledContext(const std::string& query)>;

struct DocumentedFile {
  std::string source;  // updated file contents
  std::vector<DoxygenComment> comments;
  std::vector<std::string> warnings;
};

// Documents every function, method and class definition of one file, in span order.
// Routines whose generation fails are skipped with a warning.
DocumentedFile document_source(const std::string& path, std::string_view source, LlmClient& llm,
                               const ContextProvider& context = {}, const DocgenOptions& options = {});

struct GuardrailReport {
  std::size_t errors_before = 0;
  std::size_t errors_after = 0;
  bool code_tokens_unchanged = false;

  bool ok() const { return errors_after <= errors_before && code_tokens_unchanged; }
};

GuardrailReport check_guardrails(std::string_view before, std::string_view after);

// Number of comment blocks carrying the watermark, and total watermark occurrences in comments.
struct WatermarkCensus {
  std::size_t blocks = 0;
  std::size_t occurrences = 0;
};
WatermarkCensus watermark_census(std::string_view source);

}  // namespace cello

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cello/callgraph.hpp"
#include "cello/vector_index.hpp"

namespace cello {

struct RetrievalQuotas {
  std::size_t code_k = 25;
  std::size_t text_k = 25;
};

struct ContextHit {
  ScoredHit hit;
  std::string text;

  const std::string& path() const { return hit.metadata.path; }
  friend bool operator==(const ContextHit&, const ContextHit&) = default;
};

struct AssembledContext {
  std::string query;
  std::vector<std::string> symbols;
  std::vector<ContextHit> code_hits;
  std::vector<ContextHit> text_hits;
  std::vector<std::string> lineage_notes;
  std::vector<std::string> diagnostics;

  std::vector<std::string> chunk_ids() const;  // code then text, in order
  friend bool operator==(const AssembledContext&, const AssembledContext&) = default;
};

// Contents of each ```...``` span in order, whitespace-trimmed. An opener without a closer
// yields nothing; spans that are empty after trimming are dropped.
std::vector<std::string> extract_backquoted_symbols(std::string_view query);

// Stable partition: hits whose text contains any symbol (case-sensitive substring) first,
// original order kept inside both groups. No symbols => unchanged.
std::vector<ContextHit> rerank_by_symbols(std::vector<ContextHit> hits, const std::vector<std::string>& symbols);

// Embeds the query once per collection, takes each quota independently, then reranks both
// lists by backquoted symbols. Scores are left as retrieved.
AssembledContext retrieve(const std::string& query, const RetrievalQuotas& quotas, const VectorCollection& code,
                          const VectorCollection& text);

// Appends one lineage summary per distinct graph node reached from code hit symbols.
// Symbols absent from the graph are noted in `diagnostics`. Disabled => context returned as is.
AssembledContext enrich_with_lineage(AssembledContext context, const CallGraph* graph, bool enabled);

// Required placeholders: {QUERY}, {CODE_CONTEXT}, {TEXT_CONTEXT}, {LINEAGE}.
inline constexpr std::string_view kDefaultPromptTemplate =
    "Use the retrieved context below to answer the request.\n"
    "\n"
    "## Code context\n"
    "{CODE_CONTEXT}\n"
    "## Documentation context\n"
    "{TEXT_CONTEXT}\n"
    "## Call lineage\n"
    "{LINEAGE}\n"
    "## Request\n"
    "{QUERY}\n";

// Throws TemplateError naming the first missing placeholder.
std::string render_prompt(const AssembledContext& context, std::string_view tmpl = kDefaultPromptTemplate);

// Keys: ENHANCE_PROMPT_WITH_LINEAGE, CODE_TOP_K, TEXT_TOP_K. Missing keys keep defaults.
struct RetrieverConfig {
  RetrievalQuotas quotas;
  bool enhance_prompt_with_lineage = false;

  static RetrieverConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// Bundles both collections, an optional callgraph and the configuration.
class CelloRetriever {
 public:
  CelloRetriever(const VectorCollection& code, const VectorCollection& text, const CallGraph* graph = nullptr,
                 RetrieverConfig config = {})
      : code_(code), text_(text), graph_(graph), config_(config) {}

  AssembledContext operator()(const std::string& query) const { return run(query, config_); }
  AssembledContext run(const std::string& query, const RetrieverConfig& config) const;

  const RetrieverConfig& config() const { return config_; }
  const VectorCollection& code() const { return code_; }
  const VectorCollection& text() const { return text_; }
  bool contains_chunk(const std::string& id) const;

 private:
  const VectorCollection& code_;
  const VectorCollection& text_;
  const CallGraph* graph_;
  RetrieverConfig config_;
};

nlohmann::json to_json(const AssembledContext& context);

}  // namespace cello

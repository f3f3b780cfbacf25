#include "cello/retriever.hpp"

#include <algorithm>
#include <set>

#include "cello/error.hpp"

namespace cello {

namespace {

constexpr std::string_view kFence = "```";
constexpr std::string_view kPlaceholders[] = {"{QUERY}", "{CODE_CONTEXT}", "{TEXT_CONTEXT}", "{LINEAGE}"};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<ContextHit> attach_text(const VectorCollection& c, std::vector<ScoredHit> hits) {
  std::vector<ContextHit> out;
  out.reserve(hits.size());
  for (auto& h : hits) {
    auto entry = c.find(h.chunk_id);
    out.push_back({std::move(h), entry ? std::move(entry->text) : std::string()});
  }
  return out;
}

std::string render_hits(const std::vector<ContextHit>& hits) {
  std::string out;
  for (const auto& h : hits) {
    out += "// source: ";
    out += h.path();
    out += '\n';
    out += h.text;
    if (h.text.empty() || h.text.back() != '\n') out += '\n';
    out += '\n';
  }
  return out;
}

nlohmann::json hits_json(const std::vector<ContextHit>& hits) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& h : hits) {
    out.push_back({{"chunk_id", h.hit.chunk_id},
                   {"score", h.hit.score},
                   {"path", h.path()},
                   {"kind", to_string(h.hit.metadata.kind)},
                   {"symbol", h.hit.metadata.symbol ? nlohmann::json(*h.hit.metadata.symbol) : nlohmann::json()},
                   {"text", h.text}});
  }
  return out;
}

}  // namespace

std::vector<std::string> AssembledContext::chunk_ids() const {
  std::vector<std::string> ids;
  ids.reserve(code_hits.size() + text_hits.size());
  for (const auto& h : code_hits) ids.push_back(h.hit.chunk_id);
  for (const auto& h : text_hits) ids.push_back(h.hit.chunk_id);
  return ids;
}

std::vector<std::string> extract_backquoted_symbols(std::string_view query) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto open = query.find(kFence, pos);
    if (open == std::string_view::npos) break;
    const auto close = query.find(kFence, open + kFence.size());
    if (close == std::string_view::npos) break;
    const auto inner = trim(query.substr(open + kFence.size(), close - open - kFence.size()));
    if (!inner.empty()) out.emplace_back(inner);
    pos = close + kFence.size();
  }
  return out;
}

std::vector<ContextHit> rerank_by_symbols(std::vector<ContextHit> hits, const std::vector<std::string>& symbols) {
  if (symbols.empty()) return hits;
  std::stable_partition(hits.begin(), hits.end(), [&](const ContextHit& h) {
    return std::any_of(symbols.begin(), symbols.end(),
                       [&](const std::string& s) { return h.text.find(s) != std::string::npos; });
  });
  return hits;
}

AssembledContext retrieve(const std::string& query, const RetrievalQuotas& quotas, const VectorCollection& code,
                          const VectorCollection& text) {
  AssembledContext ctx;
  ctx.query = query;
  ctx.symbols = extract_backquoted_symbols(query);
  if (quotas.code_k > 0 && code.size() > 0)
    ctx.code_hits = rerank_by_symbols(attach_text(code, code.query_text(query, quotas.code_k)), ctx.symbols);
  if (quotas.text_k > 0 && text.size() > 0)
    ctx.text_hits = rerank_by_symbols(attach_text(text, text.query_text(query, quotas.text_k)), ctx.symbols);
  return ctx;
}

AssembledContext enrich_with_lineage(AssembledContext context, const CallGraph* graph, bool enabled) {
  if (!enabled) return context;
  if (graph == nullptr) {
    context.diagnostics.push_back("lineage enabled but no callgraph loaded");
    return context;
  }
  std::set<std::string> seen;
  std::set<std::string> missing;
  for (const auto& h : context.code_hits) {
    const auto& symbol = h.hit.metadata.symbol;
    if (!symbol) continue;
    const auto ids = graph->resolve(*symbol);
    if (ids.empty()) {
      if (missing.insert(*symbol).second) context.diagnostics.push_back("symbol not in callgraph: " + *symbol);
      continue;
    }
    for (const auto& id : ids)
      if (seen.insert(id).second) context.lineage_notes.push_back(summarize_lineage(two_hop_lineage(*graph, id)));
  }
  return context;
}

std::string render_prompt(const AssembledContext& context, std::string_view tmpl) {
  for (const auto p : kPlaceholders)
    if (tmpl.find(p) == std::string_view::npos) throw TemplateError("prompt template lacks " + std::string(p));

  std::string lineage;
  for (const auto& note : context.lineage_notes) lineage += note + "\n";
  const std::string values[] = {context.query, render_hits(context.code_hits), render_hits(context.text_hits),
                                lineage};

  std::string out;
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    std::size_t best = std::string_view::npos;
    std::size_t which = 0;
    for (std::size_t i = 0; i < std::size(kPlaceholders); ++i) {
      const auto at = tmpl.find(kPlaceholders[i], pos);
      if (at < best) best = at, which = i;
    }
    if (best == std::string_view::npos) {
      out.append(tmpl.substr(pos));
      break;
    }
    out.append(tmpl.substr(pos, best - pos));
    out += values[which];
    pos = best + kPlaceholders[which].size();
  }
  return out;
}

RetrieverConfig RetrieverConfig::from_json(const nlohmann::json& j) {
  RetrieverConfig c;
  try {
    if (j.contains("ENHANCE_PROMPT_WITH_LINEAGE")) c.enhance_prompt_with_lineage = j["ENHANCE_PROMPT_WITH_LINEAGE"].get<bool>();
    if (j.contains("CODE_TOP_K")) c.quotas.code_k = j["CODE_TOP_K"].get<std::size_t>();
    if (j.contains("TEXT_TOP_K")) c.quotas.text_k = j["TEXT_TOP_K"].get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad retriever config: ") + e.what());
  }
  return c;
}

nlohmann::json RetrieverConfig::to_json() const {
  return {{"ENHANCE_PROMPT_WITH_LINEAGE", enhance_prompt_with_lineage},
          {"CODE_TOP_K", quotas.code_k},
          {"TEXT_TOP_K", quotas.text_k}};
}

AssembledContext CelloRetriever::run(const std::string& query, const RetrieverConfig& config) const {
  return enrich_with_lineage(retrieve(query, config.quotas, code_, text_), graph_, config.enhance_prompt_with_lineage);
}

bool CelloRetriever::contains_chunk(const std::string& id) const {
  return code_.find(id).has_value() || text_.find(id).has_value();
}

nlohmann::json to_json(const AssembledContext& c) {
  return {{"query", c.query},
          {"symbols", c.symbols},
          {"code_hits", hits_json(c.code_hits)},
          {"text_hits", hits_json(c.text_hits)},
          {"lineage_notes", c.lineage_notes},
          {"diagnostics", c.diagnostics}};
}

}  // namespace cello

#include <gtest/gtest.h>

#include <random>

#include "cello/error.hpp"
#include "cello/retriever.hpp"

using namespace cello;

namespace {

ContextHit hit(const std::string& id, const std::string& text) {
  return {{id, 0.5, {"p.cu", ChunkKind::CodeRoutine, std::nullopt}}, text};
}

Chunk chunk(const std::string& path, const std::string& text, ChunkKind kind, std::optional<std::string> symbol = {}) {
  Chunk c;
  c.path = path;
  c.text = text;
  c.span = {0, text.size()};
  c.id = chunk_id(path, c.span);
  c.kind = kind;
  c.symbol = std::move(symbol);
  return c;
}

struct Corpus {
  VectorCollection code{CollectionName::Code, std::make_shared<HashingEmbedder>(64)};
  VectorCollection text{CollectionName::Text, std::make_shared<HashingEmbedder>(64)};
  CallGraph graph;

  Corpus() {
    code.upsert({chunk("a.cu", "__global__ void fill_histo(float* h) { h[0] = 1; }", ChunkKind::CodeRoutine, "fill_histo"),
                 chunk("b.cu", "void launch_simulate() { simulate_hits<<<1,1>>>(); }", ChunkKind::CodeRoutine,
                       "launch_simulate"),
                 chunk("c.cu", "void unrelated_helper() {}", ChunkKind::CodeRoutine, "unrelated_helper"),
                 chunk("d.cu", "#include <cuda.h>\n", ChunkKind::CodePreamble)});
    text.upsert({chunk("doc.md", "The histogram is filled on the device.", ChunkKind::Text),
                 chunk("doc2.md", "Simulation launches one thread per hit.", ChunkKind::Text)});
    graph.add_node("run_event", "m.cu");
    graph.add_node("fill_histo", "a.cu");
    graph.add_node("launch_simulate", "b.cu");
    graph.add_edge("run_event", "fill_histo");
    graph.add_edge("run_event", "launch_simulate");
  }
};

}  // namespace

TEST(Backquotes, Extraction) {
  EXPECT_EQ(extract_backquoted_symbols("explain ```fill_histo``` and ``` normalize ```"),
            (std::vector<std::string>{"fill_histo", "normalize"}));
  EXPECT_TRUE(extract_backquoted_symbols("no symbols").empty());
  EXPECT_TRUE(extract_backquoted_symbols("open ```only").empty());
  EXPECT_TRUE(extract_backquoted_symbols("``````").empty());
  EXPECT_EQ(extract_backquoted_symbols("```a``` x ```b"), (std::vector<std::string>{"a"}));
}

// Oracle: build the expected order with two explicit passes.
TEST(Rerank, IsStablePartition) {
  std::mt19937 rng(3);
  const std::vector<std::string> words = {"alpha", "beta", "gamma", "delta"};
  for (int round = 0; round < 200; ++round) {
    std::vector<ContextHit> hits;
    const int n = static_cast<int>(rng() % 30);
    for (int i = 0; i < n; ++i) hits.push_back(hit("c" + std::to_string(i), words[rng() % 4] + " " + words[rng() % 4]));
    std::vector<std::string> symbols;
    if (rng() % 4 != 0) symbols.push_back(words[rng() % 4]);
    if (rng() % 3 == 0) symbols.push_back(words[rng() % 4]);

    std::vector<ContextHit> want;
    auto matches = [&](const ContextHit& h) {
      for (const auto& s : symbols)
        if (h.text.find(s) != std::string::npos) return true;
      return false;
    };
    for (const auto& h : hits)
      if (matches(h)) want.push_back(h);
    for (const auto& h : hits)
      if (!matches(h)) want.push_back(h);
    EXPECT_EQ(rerank_by_symbols(hits, symbols), want);
  }
}

TEST(Rerank, CaseSensitive) {
  const auto out = rerank_by_symbols({hit("1", "Fill"), hit("2", "fill")}, {"fill"});
  EXPECT_EQ(out[0].hit.chunk_id, "2");
}

TEST(Retrieve, QuotasAreIndependent) {
  Corpus c;
  auto ctx = retrieve("histogram", {2, 1}, c.code, c.text);
  EXPECT_EQ(ctx.code_hits.size(), 2u);
  EXPECT_EQ(ctx.text_hits.size(), 1u);
  ctx = retrieve("histogram", {0, 5}, c.code, c.text);
  EXPECT_TRUE(ctx.code_hits.empty());
  EXPECT_EQ(ctx.text_hits.size(), 2u);
  ctx = retrieve("histogram", {50, 0}, c.code, c.text);
  EXPECT_EQ(ctx.code_hits.size(), 4u);
  for (const auto& h : ctx.code_hits) EXPECT_FALSE(h.text.empty());
}

TEST(Retrieve, SymbolHitsComeFirst) {
  Corpus c;
  const auto ctx = retrieve("where is ```unrelated_helper``` used", {4, 2}, c.code, c.text);
  ASSERT_EQ(ctx.symbols, (std::vector<std::string>{"unrelated_helper"}));
  EXPECT_EQ(ctx.code_hits.front().hit.metadata.symbol, "unrelated_helper");
  const auto ids = ctx.chunk_ids();
  EXPECT_EQ(ids.size(), 6u);
}

TEST(Retrieve, Lineage) {
  Corpus c;
  const CelloRetriever off(c.code, c.text, &c.graph, {{4, 0}, false});
  EXPECT_TRUE(off("fill").lineage_notes.empty());

  const CelloRetriever on(c.code, c.text, &c.graph, {{4, 0}, true});
  const auto ctx = on("fill");
  EXPECT_EQ(ctx.lineage_notes.size(), 2u);
  EXPECT_EQ(ctx.diagnostics, (std::vector<std::string>{"symbol not in callgraph: unrelated_helper"}));
  EXPECT_NE(render_prompt(ctx).find("Function fill_histo is called by: run_event."), std::string::npos);

  const CelloRetriever no_graph(c.code, c.text, nullptr, {{4, 0}, true});
  EXPECT_EQ(no_graph("fill").diagnostics.size(), 1u);
  EXPECT_TRUE(on.contains_chunk(ctx.code_hits[0].hit.chunk_id));
  EXPECT_FALSE(on.contains_chunk("0000000000000000"));
}

TEST(Prompt, RendersAllPlaceholders) {
  AssembledContext ctx;
  ctx.query = "what does {CODE_CONTEXT} mean";
  ctx.code_hits = {hit("1", "int f();")};
  ctx.lineage_notes = {"note"};
  const auto out = render_prompt(ctx, "Q={QUERY}|C={CODE_CONTEXT}|T={TEXT_CONTEXT}|L={LINEAGE}");
  // values are not re-expanded
  EXPECT_EQ(out, "Q=what does {CODE_CONTEXT} mean|C=// source: p.cu\nint f();\n\n|T=|L=note\n");
}

TEST(Prompt, MissingPlaceholderIsTemplateError) {
  try {
    render_prompt({}, "{QUERY} {CODE_CONTEXT} {TEXT_CONTEXT}");
    FAIL();
  } catch (const TemplateError& e) {
    EXPECT_NE(std::string(e.what()).find("{LINEAGE}"), std::string::npos);
  }
}

TEST(Config, KeysAndDefaults) {
  const auto d = RetrieverConfig::from_json(nlohmann::json::object());
  EXPECT_FALSE(d.enhance_prompt_with_lineage);
  EXPECT_EQ(d.quotas.code_k, 25u);
  EXPECT_EQ(d.quotas.text_k, 25u);
  const auto c = RetrieverConfig::from_json({{"ENHANCE_PROMPT_WITH_LINEAGE", true}, {"CODE_TOP_K", 3}});
  EXPECT_TRUE(c.enhance_prompt_with_lineage);
  EXPECT_EQ(c.quotas.code_k, 3u);
  EXPECT_EQ(c.quotas.text_k, 25u);
  EXPECT_EQ(RetrieverConfig::from_json(c.to_json()).to_json(), c.to_json());
  EXPECT_THROW(RetrieverConfig::from_json({{"CODE_TOP_K", "many"}}), ParseError);
}

TEST(Context, JsonShape) {
  Corpus c;
  const auto j = to_json(retrieve("x", {1, 1}, c.code, c.text));
  for (const char* k : {"query", "symbols", "code_hits", "text_hits", "lineage_notes", "diagnostics"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_TRUE(j["code_hits"][0].contains("chunk_id"));
}

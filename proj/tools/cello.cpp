#include <algorithm>
#include <atomic>
#include <csignal>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cello/callgraph.hpp"
#include "cello/chat.hpp"
#include "cello/chunker.hpp"
#include "cello/corpus.hpp"
#include "cello/docgen.hpp"
#include "cello/embedding.hpp"
#include "cello/error.hpp"
#include "cello/eval.hpp"
#include "cello/kernels.hpp"
#include "cello/llm.hpp"
#include "cello/retriever.hpp"
#include "cello/service.hpp"
#include "cello/udiff.hpp"
#include "cello/vector_index.hpp"

namespace fs = std::filesystem;
using namespace cello;

namespace {

constexpr const char* kDefaultLlm = "http://127.0.0.1:8080/v1/chat/completions";

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_file(out_path, text);
}

void warn(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

std::string dump(const nlohmann::json& j) { return j.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n"; }

struct Index {
  std::optional<VectorCollection> code;
  std::optional<VectorCollection> text;
};

// Loads whichever collections exist under `dir`; a missing one becomes an empty collection with
// the other's provider.
Index load_index(const fs::path& dir) {
  Index idx;
  if (fs::exists(dir / "code" / "manifest.json")) idx.code = VectorCollection::load(dir / "code");
  if (fs::exists(dir / "text" / "manifest.json")) idx.text = VectorCollection::load(dir / "text");
  if (!idx.code && !idx.text) throw InputError("no collections under " + dir.string() + "; run `cello index` first");
  if (!idx.code) idx.code.emplace(CollectionName::Code, idx.text->provider_ptr());
  if (!idx.text) idx.text.emplace(CollectionName::Text, idx.code->provider_ptr());
  return idx;
}

std::optional<CallGraph> maybe_graph(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return load_callgraph(read_file(path));
}

RetrieverConfig load_config(const std::string& path) {
  if (path.empty()) return {};
  try {
    return RetrieverConfig::from_json(nlohmann::json::parse(read_file(path)));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("config " + path + ": " + e.what());
  }
}

std::pair<std::string, int> parse_bind(const std::string& bind) {
  const auto colon = bind.rfind(':');
  if (colon == std::string::npos) throw InputError("--bind expects host:port");
  try {
    return {bind.substr(0, colon), std::stoi(bind.substr(colon + 1))};
  } catch (const std::exception&) {
    throw InputError("--bind expects host:port");
  }
}

ChatService* g_service = nullptr;

void on_signal(int) {
  if (g_service) g_service->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Retrieval-augmented assistant tooling for large C/C++/CUDA codebases"};
  app.require_subcommand(1);

  // ingest
  std::string root, text_root, out;
  auto* ingest = app.add_subcommand("ingest", "Walk a repository and write a corpus manifest");
  ingest->add_option("--root", root, "Code root")->required();
  ingest->add_option("--text-root", text_root, "Separate documentation root");
  ingest->add_option("--out", out, "Manifest path (stdout when omitted)");

  // chunk
  std::string manifest_path;
  std::size_t max_bytes = ChunkLimits{}.max_bytes;
  TextWindow window;
  auto* chunk = app.add_subcommand("chunk", "Split manifest files into retrievable chunks");
  chunk->add_option("--manifest", manifest_path, "Manifest from `cello ingest`")->required();
  chunk->add_option("--out", out, "Chunks JSONL (stdout when omitted)");
  chunk->add_option("--max-bytes", max_bytes, "Largest code chunk")->capture_default_str();
  chunk->add_option("--window", window.window, "Text window in code points")->capture_default_str();
  chunk->add_option("--overlap", window.overlap, "Text window overlap in code points")->capture_default_str();

  // kernels
  std::string paradigm, chunks_path;
  auto* kernels = app.add_subcommand("kernels", "List GPU kernels found in chunks");
  kernels->add_option("--paradigm", paradigm, "cuda, kokkos or openmp")->required();
  kernels->add_option("--chunks", chunks_path, "Chunks JSONL")->required();
  kernels->add_option("--out", out, "Output JSON (stdout when omitted)");

  // index
  std::string collection, provider = std::string(kHashingProviderName), endpoint, index_dir = "index";
  std::size_t dims = 384;
  auto* index = app.add_subcommand("index", "Embed chunks into a vector collection");
  index->add_option("--chunks", chunks_path, "Chunks JSONL")->required();
  index->add_option("--collection", collection, "code or text")->required()->check(CLI::IsMember({"code", "text"}));
  index->add_option("--provider", provider, "Embedding provider name")->capture_default_str();
  index->add_option("--dims", dims, "Embedding dimensions")->capture_default_str();
  index->add_option("--endpoint", endpoint, "HTTP embedding endpoint");
  index->add_option("--index-dir", index_dir, "Index directory")->capture_default_str();

  // query
  std::string q, config_path, graph_path;
  std::optional<std::size_t> code_k, text_k;
  bool lineage = false;
  auto* query = app.add_subcommand("query", "Retrieve context for a question");
  query->add_option("--q", q, "Query text")->required();
  query->add_option("--code-k", code_k, "Code hits to keep");
  query->add_option("--text-k", text_k, "Documentation hits to keep");
  query->add_flag("--lineage", lineage, "Add callgraph lineage notes");
  query->add_option("--config", config_path, "Retriever config JSON");
  query->add_option("--graph", graph_path, "callgraph.json");
  query->add_option("--index-dir", index_dir, "Index directory")->capture_default_str();
  query->add_option("--out", out, "Context JSON (stdout when omitted)");
  bool show_prompt = false;
  query->add_flag("--prompt", show_prompt, "Print the rendered prompt instead of JSON");

  // lineage
  std::string fn;
  auto* lineage_cmd = app.add_subcommand("lineage", "Summarize callers and callees of a function");
  lineage_cmd->add_option("--graph", graph_path, "callgraph.json")->required();
  lineage_cmd->add_option("--fn", fn, "Function id")->required();

  // docgen
  bool dry_run = false, summaries = false;
  std::string llm_url = kDefaultLlm, model = "local", audit_log;
  unsigned jobs = 1;
  auto* docgen = app.add_subcommand("docgen", "Insert generated Doxygen comments");
  docgen->add_option("--manifest", manifest_path, "Manifest from `cello ingest`")->required();
  docgen->add_flag("--dry-run", dry_run, "Print a unified diff instead of writing files");
  docgen->add_flag("--summaries", summaries, "Also write <file>.summary.md");
  docgen->add_option("--endpoint", llm_url, "Chat-completion URL")->capture_default_str();
  docgen->add_option("--model", model, "Model name")->capture_default_str();
  docgen->add_option("--index-dir", index_dir, "Index with a text collection for context");
  docgen->add_option("--jobs", jobs, "Files processed concurrently")->capture_default_str()->check(CLI::Range(1u, 64u));
  docgen->add_option("--audit-log", audit_log, "JSON-lines log of LLM traffic");

  // chat
  std::string transcript_path;
  auto* chat = app.add_subcommand("chat", "Interactive assistant on stdin/stdout");
  chat->add_flag("--lineage", lineage, "Add callgraph lineage notes");
  chat->add_option("--endpoint", llm_url, "Chat-completion URL")->capture_default_str();
  chat->add_option("--model", model, "Model name")->capture_default_str();
  chat->add_option("--index-dir", index_dir, "Index directory")->capture_default_str();
  chat->add_option("--graph", graph_path, "callgraph.json");
  chat->add_option("--config", config_path, "Retriever config JSON");
  chat->add_option("--audit-log", audit_log, "JSON-lines log of LLM traffic");
  chat->add_option("--transcript", transcript_path, "Write the session transcript here on exit");

  // serve
  std::string bind = "127.0.0.1:8000", static_dir;
  int idle_minutes = 30;
  auto* serve = app.add_subcommand("serve", "HTTP service for the web chat client");
  serve->add_option("--bind", bind, "host:port")->capture_default_str();
  serve->add_option("--endpoint", llm_url, "Chat-completion URL")->capture_default_str();
  serve->add_option("--model", model, "Model name")->capture_default_str();
  serve->add_option("--index-dir", index_dir, "Index directory")->capture_default_str();
  serve->add_option("--graph", graph_path, "callgraph.json");
  serve->add_option("--config", config_path, "Retriever config JSON");
  serve->add_option("--static", static_dir, "Directory served at /");
  serve->add_option("--idle-minutes", idle_minutes, "Session idle expiry")->capture_default_str();
  serve->add_option("--audit-log", audit_log, "JSON-lines log of LLM traffic");

  // eval
  std::string truth_path, retrieval_path;
  auto* eval = app.add_subcommand("eval", "Score retrieval completeness against ground truth");
  eval->add_option("--truth", truth_path, "truth.json")->required();
  eval->add_option("--retrieval", retrieval_path, "Retrieval dump JSON")->required();
  eval->add_option("--out", out, "Markdown report (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  auto make_llm = [&] {
    std::optional<fs::path> log;
    if (!audit_log.empty()) log = audit_log;
    return std::make_unique<HttpLlmClient>(llm_url, RetryPolicy{}, std::chrono::minutes(5), log);
  };

  try {
    if (*ingest) {
      std::optional<fs::path> tr;
      if (!text_root.empty()) tr = text_root;
      const auto m = scan_repository(root, {}, tr);
      for (const auto& s : m.skipped) std::cerr << "warning: skipped " << s.path << ": " << s.reason << "\n";
      emit(out, dump_manifest(m));
    } else if (*chunk) {
      const auto m = manifest_from_json(nlohmann::json::parse(read_file(manifest_path)));
      const auto r = chunk_manifest(m, ChunkLimits{max_bytes}, window);
      warn(r.warnings);
      emit(out, dump_jsonl(r.chunks));
    } else if (*kernels) {
      const auto p = parse_paradigm(paradigm);
      const auto scan = find_kernels(parse_jsonl(read_file(chunks_path)), KernelPattern::for_paradigm(p));
      emit(out, dump(to_json(scan, p)));
    } else if (*index) {
      const auto name = collection == "code" ? CollectionName::Code : CollectionName::Text;
      const fs::path dir = fs::path(index_dir) / collection;
      std::optional<std::string> ep;
      if (!endpoint.empty()) ep = endpoint;
      auto prov = make_provider(provider, dims, ep);
      auto coll = fs::exists(dir / "manifest.json") ? VectorCollection::load(dir, prov) : VectorCollection(name, prov);
      std::vector<Chunk> accepted;
      std::size_t skipped = 0;
      for (auto& c : parse_jsonl(read_file(chunks_path))) {
        if (accepts(name, c.kind))
          accepted.push_back(std::move(c));
        else
          ++skipped;
      }
      const auto r = coll.upsert(accepted);
      coll.persist(dir);
      std::cout << collection << ": " << r.inserted << " inserted, " << r.updated << " updated, " << r.unchanged
                << " unchanged, " << skipped << " chunks of the other kind skipped\n";
    } else if (*query) {
      auto config = load_config(config_path);
      if (code_k) config.quotas.code_k = *code_k;
      if (text_k) config.quotas.text_k = *text_k;
      if (lineage) config.enhance_prompt_with_lineage = true;
      const auto graph = maybe_graph(graph_path);
      if (config.enhance_prompt_with_lineage && !graph)
        std::cerr << "warning: lineage requested without --graph; no lineage notes\n";
      auto idx = load_index(index_dir);
      const CelloRetriever retriever(*idx.code, *idx.text, graph ? &*graph : nullptr, config);
      const auto ctx = retriever(q);
      warn(ctx.diagnostics);
      emit(out, show_prompt ? render_prompt(ctx) : dump(to_json(ctx)));
    } else if (*lineage_cmd) {
      const auto graph = load_callgraph(read_file(graph_path));
      std::cout << summarize_lineage(two_hop_lineage(graph, fn)) << "\n";
    } else if (*docgen) {
      const auto m = manifest_from_json(nlohmann::json::parse(read_file(manifest_path)));
      auto llm = make_llm();
      std::optional<VectorCollection> text;
      if (docgen->count("--index-dir") && fs::exists(fs::path(index_dir) / "text" / "manifest.json"))
        text = VectorCollection::load(fs::path(index_dir) / "text");
      ContextProvider context;
      if (text) {
        context = [&text](const std::string& q) {
          AssembledContext ctx;
          ctx.query = q;
          for (auto& h : text->query_text(q, 5)) {
            auto entry = text->find(h.chunk_id);
            ctx.text_hits.push_back({std::move(h), entry ? entry->text : std::string()});
          }
          return ctx;
        };
      }
      DocgenOptions options;
      options.model = model;

      std::vector<const SourceFile*> files;
      for (const auto& f : m.files)
        if (f.kind == FileKind::Code) files.push_back(&f);
      std::sort(files.begin(), files.end(), [](auto* a, auto* b) { return a->path < b->path; });

      struct Outcome {
        std::string diff;
        std::vector<std::string> warnings;
      };
      std::vector<Outcome> outcomes(files.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
          const auto& f = *files[i];
          auto& o = outcomes[i];
          try {
            const auto path = m.resolve(f);
            const auto before = read_file(path);
            auto doc = document_source(f.path, before, *llm, context, options);
            o.warnings = doc.warnings;
            const auto guard = check_guardrails(before, doc.source);
            if (!guard.ok()) {
              o.warnings.push_back(f.path + ": guardrail check failed, file left untouched");
              continue;
            }
            if (dry_run)
              o.diff += unified_diff(before, doc.source, "a/" + f.path, "b/" + f.path);
            else if (doc.source != before)
              write_file(path, doc.source);
            if (summaries) {
              const auto chunked = chunk_code(before, f.path, f.language, {});
              const auto summary = summarize_file(f.path, chunked.chunks,
                                                  context ? context(f.path) : AssembledContext{}, *llm, options);
              const auto spath = summary_path(path);
              const auto old = fs::exists(spath) ? read_file(spath) : std::string();
              if (dry_run)
                o.diff += unified_diff(old, summary, "a/" + f.path + ".summary.md", "b/" + f.path + ".summary.md");
              else
                write_file(spath, summary);
            }
          } catch (const Error& e) {
            o.warnings.push_back(f.path + ": " + e.what());
          }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();
      for (const auto& o : outcomes) {
        warn(o.warnings);
        std::cout << o.diff;
      }
    } else if (*chat) {
      auto config = load_config(config_path);
      if (lineage) config.enhance_prompt_with_lineage = true;
      const auto graph = maybe_graph(graph_path);
      std::optional<Index> idx;
      try {
        idx = load_index(index_dir);
      } catch (const InputError& e) {
        std::cerr << "warning: " << e.what() << "; chatting without retrieval\n";
      }
      std::optional<CelloRetriever> retriever;
      if (idx) retriever.emplace(*idx->code, *idx->text, graph ? &*graph : nullptr, config);
      SessionConfig sc;
      sc.retriever = config;
      sc.model = model;
      if (idx) sc.embedder = idx->code->provider().name();
      ChatSession session("repl", sc);
      auto llm = make_llm();
      std::cerr << "Type a question; /task <collect_kernels|port_kernels> <cuda|kokkos|openmp> <codebase> fills a "
                   "task prompt; /quit exits.\n";
      std::string line;
      while (std::cerr << "> " && std::getline(std::cin, line)) {
        if (line.empty()) continue;
        if (line == "/quit" || line == "/exit") break;
        std::string message = line;
        if (line.rfind("/task ", 0) == 0) {
          std::istringstream in(line.substr(6));
          std::string name, para, codebase;
          in >> name >> para >> codebase;
          try {
            message = render_task_template(task_template(name), task_bindings(parse_paradigm(para), codebase));
          } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            continue;
          }
        }
        try {
          const auto r = chat_turn(session, message, retriever ? &*retriever : nullptr, *llm);
          warn(r.warnings);
          std::cout << r.reply << "\n";
          for (const auto& h : r.context.code_hits) std::cerr << "  [code] " << h.path() << "\n";
          for (const auto& h : r.context.text_hits) std::cerr << "  [text] " << h.path() << "\n";
        } catch (const Error& e) {
          std::cerr << "error: " << e.what() << " (turn not recorded)\n";
        }
      }
      if (!transcript_path.empty()) write_file(transcript_path, dump(session.transcript()));
    } else if (*serve) {
      auto config = load_config(config_path);
      const auto graph = maybe_graph(graph_path);
      std::optional<Index> idx;
      try {
        idx = load_index(index_dir);
      } catch (const InputError& e) {
        std::cerr << "warning: " << e.what() << "; serving without retrieval\n";
      }
      std::optional<CelloRetriever> retriever;
      if (idx) retriever.emplace(*idx->code, *idx->text, graph ? &*graph : nullptr, config);
      ServiceOptions options;
      options.session_defaults.retriever = config;
      options.session_defaults.model = model;
      options.idle_timeout = std::chrono::minutes(idle_minutes);
      if (!static_dir.empty()) options.static_dir = static_dir;
      auto llm = make_llm();
      ChatService service(retriever ? &*retriever : nullptr, *llm, options);
      const auto [host, port] = parse_bind(bind);
      g_service = &service;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cerr << "serving on " << host << ":" << port << "\n";
      service.run(host, port);
      g_service = nullptr;
    } else if (*eval) {
      const auto truth = load_ground_truth(read_file(truth_path));
      const auto runs = load_retrieval_dump(read_file(retrieval_path));
      const auto ev = evaluate(truth, runs);
      warn(ev.warnings);
      emit(out, render_report(ev.reports));
    }
  } catch (const Error& e) {
    std::cerr << "cello: error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "cello: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

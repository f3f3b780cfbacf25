#include "cello/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "cello/error.hpp"
#include "cello/syntax.hpp"

namespace cello {

CompletenessReport completeness_score(const std::vector<ApplicationCount>& counts, Paradigm paradigm,
                                      std::string configuration) {
  if (counts.empty()) throw InputError("completeness needs at least one application");
  CompletenessReport report;
  report.paradigm = paradigm;
  report.configuration = std::move(configuration);
  double sum = 0.0;
  for (const auto& c : counts) {
    if (c.total == 0) throw InputError(c.application + ": total must be positive");
    if (c.retrieved > c.total)
      throw InputError(c.application + ": retrieved " + std::to_string(c.retrieved) + " exceeds total " +
                       std::to_string(c.total));
    const double ratio = static_cast<double>(c.retrieved) / static_cast<double>(c.total);
    report.ratios.push_back({c.application, c.retrieved, c.total, ratio});
    sum += ratio;
  }
  report.score = sum / static_cast<double>(counts.size());
  return report;
}

double round_to(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

std::string format_score(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", round_to(value, 3));
  return buf;
}

GroundTruth ground_truth_from_json(const nlohmann::json& j) {
  try {
    GroundTruth t;
    t.paradigm = parse_paradigm(j.at("paradigm").get<std::string>());
    t.application = j.at("application").get<std::string>();
    const auto& total = j.at("total");
    if (!total.is_number_unsigned() || total.get<std::size_t>() == 0)
      throw InputError(t.application + ": total must be a positive integer");
    t.total = total.get<std::size_t>();
    if (j.contains("names") && !j["names"].is_null()) {
      t.names = j["names"].get<std::vector<std::string>>();
      if (t.names->size() > t.total)
        throw InputError(t.application + ": more kernel names than the stated total");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ground truth entry: ") + e.what());
  }
}

std::vector<GroundTruth> load_ground_truth(std::string_view document) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("ground truth is not JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("ground truth must be a JSON array");
  std::vector<GroundTruth> out;
  for (const auto& e : j) out.push_back(ground_truth_from_json(e));
  return out;
}

RecallResult kernel_recall(const std::vector<Chunk>& retrieved, const GroundTruth& truth, const KernelPattern& pattern) {
  if (pattern.paradigm != truth.paradigm)
    throw InputError("kernel pattern is for " + std::string(to_string(pattern.paradigm)) + ", ground truth for " +
                     std::string(to_string(truth.paradigm)));
  RecallResult r;
  r.found = find_kernels(retrieved, pattern).kernels;
  if (!truth.names) {
    r.retrieved = r.found.size();
    return r;
  }
  std::set<std::string> seen;
  for (const auto& k : r.found) seen.insert(k.name);
  std::set<std::string> wanted(truth.names->begin(), truth.names->end());
  for (const auto& name : wanted) {
    if (seen.count(name))
      ++r.retrieved;
    else
      r.missing.push_back(name);
  }
  return r;
}

RecallResult kernel_recall(const AssembledContext& context, const GroundTruth& truth, const KernelPattern& pattern) {
  std::vector<Chunk> chunks;
  for (const auto& h : context.code_hits) {
    Chunk c;
    c.id = h.hit.chunk_id;
    c.path = h.path();
    c.text = h.text;
    c.kind = h.hit.metadata.kind;
    c.symbol = h.hit.metadata.symbol;
    // file offsets are not carried by hits; each hit gets its own local range
    c.span = {0, h.text.size()};
    chunks.push_back(std::move(c));
  }
  return kernel_recall(chunks, truth, pattern);
}

SplitCounts code_text_split(const std::vector<ScoredHit>& hits, std::size_t n) {
  SplitCounts s;
  const std::size_t window = std::min(n, hits.size());
  for (std::size_t i = 0; i < window; ++i) {
    if (is_code(hits[i].metadata.kind))
      ++s.code;
    else
      ++s.text;
  }
  return s;
}

std::vector<ByteRange> routine_spans(std::string_view source) {
  const auto tree = syntax::parse(source);
  std::vector<ByteRange> spans;
  for (const auto* node : syntax::routine_definitions(tree))
    if (!node->error) spans.push_back(node->range);
  return spans;
}

Census fragment_census(const std::vector<Chunk>& chunks, const std::map<std::string, std::vector<ByteRange>>& routines,
                       std::size_t n) {
  static const std::vector<ByteRange> kNone;
  Census census;
  std::size_t seen = 0;
  for (const auto& c : chunks) {
    if (seen == n) break;
    if (!is_code(c.kind)) continue;
    ++seen;
    const auto it = routines.find(c.path);
    const auto& spans = it == routines.end() ? kNone : it->second;
    bool cuts = false;
    bool holds = false;
    for (const auto& r : spans) {
      const bool begins_inside = c.span.begin > r.begin && c.span.begin < r.end;
      const bool ends_inside = c.span.end > r.begin && c.span.end < r.end;
      if (begins_inside || ends_inside) cuts = true;
      if (c.span.contains(r)) holds = true;
    }
    if (cuts)
      ++census.partial;
    else if (holds && syntax::delimiters_balanced(c.text))
      ++census.complete;
  }
  return census;
}

std::string render_report(const std::vector<CompletenessReport>& reports) {
  std::string out =
      "| Paradigm | Configuration | Applications | Score |\n"
      "|---|---|---|---|\n";
  for (const auto& r : reports) {
    std::string apps;
    for (const auto& a : r.ratios) {
      if (!apps.empty()) apps += "; ";
      apps += a.application + " " + std::to_string(a.retrieved) + "/" + std::to_string(a.total);
    }
    out += "| " + std::string(to_string(r.paradigm)) + " | " + r.configuration + " | " + apps + " | " +
           format_score(r.score) + " |\n";
  }
  return out;
}

std::vector<RetrievalRun> load_retrieval_dump(std::string_view document) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("retrieval dump is not JSON: ") + e.what());
  }
  try {
    std::vector<RetrievalRun> runs;
    for (const auto& r : j.at("runs")) {
      RetrievalRun run;
      run.configuration = r.at("configuration").get<std::string>();
      run.application = r.at("application").get<std::string>();
      for (const auto& c : r.at("chunks")) {
        Chunk chunk;
        chunk.path = c.at("path").get<std::string>();
        chunk.text = c.at("text").get<std::string>();
        if (c.contains("symbol") && !c["symbol"].is_null()) chunk.symbol = c["symbol"].get<std::string>();
        chunk.kind = ChunkKind::CodeRoutine;
        chunk.span = {0, chunk.text.size()};
        chunk.id = chunk_id(chunk.path + "#" + std::to_string(run.chunks.size()), chunk.span);
        run.chunks.push_back(std::move(chunk));
      }
      runs.push_back(std::move(run));
    }
    return runs;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed retrieval dump: ") + e.what());
  }
}

Evaluation evaluate(const std::vector<GroundTruth>& truth, const std::vector<RetrievalRun>& runs) {
  Evaluation ev;
  std::set<std::string> configurations;
  for (const auto& r : runs) configurations.insert(r.configuration);

  for (const Paradigm p : {Paradigm::CUDA, Paradigm::Kokkos, Paradigm::OpenMP}) {
    const auto pattern = KernelPattern::for_paradigm(p);
    for (const auto& config : configurations) {
      std::vector<ApplicationCount> counts;
      for (const auto& t : truth) {
        if (t.paradigm != p) continue;
        std::vector<Chunk> chunks;
        bool any = false;
        for (const auto& r : runs) {
          if (r.configuration != config || r.application != t.application) continue;
          any = true;
          chunks.insert(chunks.end(), r.chunks.begin(), r.chunks.end());
        }
        if (!any)
          ev.warnings.push_back(config + ": no retrieval for " + t.application + " (" + std::string(to_string(p)) +
                                "), counted as 0");
        auto recall = kernel_recall(chunks, t, pattern);
        if (recall.retrieved > t.total) {
          ev.warnings.push_back(config + ": " + t.application + " yields " + std::to_string(recall.retrieved) +
                                " kernels, more than the stated total; capped");
          recall.retrieved = t.total;
        }
        counts.push_back({t.application, recall.retrieved, t.total});
      }
      if (!counts.empty()) ev.reports.push_back(completeness_score(counts, p, config));
    }
  }
  return ev;
}

}  // namespace cello

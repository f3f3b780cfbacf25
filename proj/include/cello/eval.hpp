#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cello/chunker.hpp"
#include "cello/kernels.hpp"
#include "cello/retriever.hpp"

namespace cello {

struct ApplicationCount {
  std::string application;
  std::size_t retrieved = 0;
  std::size_t total = 0;
};

struct ApplicationRatio {
  std::string application;
  std::size_t retrieved = 0;
  std::size_t total = 0;
  double ratio = 0.0;
};

struct CompletenessReport {
  Paradigm paradigm = Paradigm::CUDA;
  std::string configuration;
  std::vector<ApplicationRatio> ratios;
  double score = 0.0;  // unrounded mean of the ratios
};

// Throws InputError for an empty list, a zero total or retrieved > total.
CompletenessReport completeness_score(const std::vector<ApplicationCount>& counts, Paradigm paradigm = Paradigm::CUDA,
                                      std::string configuration = {});

// Half away from zero.
double round_to(double value, int decimals);
std::string format_score(double value);  // three decimals

struct GroundTruth {
  Paradigm paradigm = Paradigm::CUDA;
  std::string application;
  std::size_t total = 0;
  std::optional<std::vector<std::string>> names;
};

// Validates total > 0 and total >= |names|.
GroundTruth ground_truth_from_json(const nlohmann::json& j);
std::vector<GroundTruth> load_ground_truth(std::string_view document);

struct RecallResult {
  std::size_t retrieved = 0;
  std::vector<std::string> missing;  // truth names not found, sorted
  std::vector<KernelName> found;     // distinct kernels seen in the retrieval
};

// With names: retrieved = |distinct found names ∩ truth names|. Without: number of distinct
// (name, path) kernels found. Throws InputError when the pattern is for another paradigm.
RecallResult kernel_recall(const std::vector<Chunk>& retrieved, const GroundTruth& truth, const KernelPattern& pattern);
RecallResult kernel_recall(const AssembledContext& context, const GroundTruth& truth, const KernelPattern& pattern);

struct SplitCounts {
  std::size_t code = 0;
  std::size_t text = 0;

  friend bool operator==(const SplitCounts&, const SplitCounts&) = default;
};

// Counts over the first min(n, hits) entries by chunk kind.
SplitCounts code_text_split(const std::vector<ScoredHit>& hits, std::size_t n);

struct Census {
  std::size_t partial = 0;
  std::size_t complete = 0;

  friend bool operator==(const Census&, const Census&) = default;
};

// Routine definition spans of one source file.
std::vector<ByteRange> routine_spans(std::string_view source);

// Over the first n code chunks: a chunk that starts or ends strictly inside a routine is
// partial; one that cuts no routine, holds at least one whole routine and has balanced
// delimiters is complete; anything else (includes, declarations) counts as neither.
Census fragment_census(const std::vector<Chunk>& chunks, const std::map<std::string, std::vector<ByteRange>>& routines,
                       std::size_t n);

// One row per report, in input order.
std::string render_report(const std::vector<CompletenessReport>& reports);

// Retrieval dump: {"runs": [{"configuration", "application", "chunks": [{"path", "text", "symbol"?}]}]}.
struct RetrievalRun {
  std::string configuration;
  std::string application;
  std::vector<Chunk> chunks;
};

std::vector<RetrievalRun> load_retrieval_dump(std::string_view document);

struct Evaluation {
  std::vector<CompletenessReport> reports;  // sorted by (paradigm, configuration)
  std::vector<std::string> warnings;
};

// Scores every (paradigm, configuration) pair present in the dump against the truth entries of
// that paradigm. An application without a run for a configuration scores 0 with a warning.
Evaluation evaluate(const std::vector<GroundTruth>& truth, const std::vector<RetrievalRun>& runs);

}  // namespace cello

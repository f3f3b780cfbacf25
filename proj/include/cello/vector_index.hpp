#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cello/chunker.hpp"
#include "cello/embedding.hpp"

namespace cello {

enum class CollectionName { Code, Text };

std::string_view to_string(CollectionName name);
CollectionName parse_collection_name(std::string_view s);

// Which chunk kinds a collection accepts.
constexpr bool accepts(CollectionName name, ChunkKind kind) noexcept {
  return name == CollectionName::Code ? is_code(kind) : kind == ChunkKind::Text;
}

struct EntryMetadata {
  std::string path;
  ChunkKind kind = ChunkKind::CodeRoutine;
  std::optional<std::string> symbol;

  friend bool operator==(const EntryMetadata&, const EntryMetadata&) = default;
};

struct CollectionEntry {
  std::string chunk_id;
  std::uint64_t content_hash = 0;
  Vector vector;
  EntryMetadata metadata;
  std::string text;
};

struct ScoredHit {
  std::string chunk_id;
  double score = 0.0;
  EntryMetadata metadata;

  friend bool operator==(const ScoredHit&, const ScoredHit&) = default;
};

struct UpsertRejection {
  std::string chunk_id;
  std::string reason;
};

struct UpsertResult {
  std::size_t inserted = 0;
  std::size_t updated = 0;
  std::size_t unchanged = 0;
  std::vector<UpsertRejection> rejected;  // non-empty => nothing was written
};

// One named embedding index. Exact cosine search over L2-normalized vectors.
//
// Thread safety: any number of concurrent readers (query_*, find, persist) or one writer (upsert).
class VectorCollection {
 public:
  VectorCollection(CollectionName name, std::shared_ptr<const EmbeddingProvider> provider);

  VectorCollection(VectorCollection&&) noexcept = default;
  VectorCollection& operator=(VectorCollection&&) noexcept = default;

  CollectionName name() const noexcept { return name_; }
  const EmbeddingProvider& provider() const noexcept { return *provider_; }
  std::shared_ptr<const EmbeddingProvider> provider_ptr() const noexcept { return provider_; }
  std::size_t dims() const noexcept { return provider_->dims(); }
  std::size_t size() const;

  // Embeds and stores chunks. A chunk whose id and content are already present is skipped.
  // If any chunk has a kind this collection does not accept, the whole batch is rejected.
  UpsertResult upsert(const std::vector<Chunk>& chunks);

  // Stores pre-computed vectors (renormalized when needed). Used by tests and importers.
  void insert_vector(const std::string& chunk_id, Vector vector, EntryMetadata metadata, std::string text = {});

  // min(k, size()) hits, non-increasing score, ties by ascending chunk id. Throws InputError
  // when the query has the wrong number of components.
  std::vector<ScoredHit> query_top_k(std::span<const float> query, std::size_t k) const;

  // Embeds `text` with this collection's provider, then query_top_k.
  std::vector<ScoredHit> query_text(const std::string& text, std::size_t k) const;

  std::optional<CollectionEntry> find(const std::string& chunk_id) const;
  std::vector<std::string> ids() const;

  // Layout: manifest.json, ids.jsonl (row i describes entry i), vectors.f32 (little-endian
  // float32, row-major). Holds <dir>/.lock while writing.
  void persist(const std::filesystem::path& dir) const;

  // Rebuilds the provider from manifest.json unless one is supplied; a supplied provider must
  // match the stored dims.
  static VectorCollection load(const std::filesystem::path& dir,
                               std::shared_ptr<const EmbeddingProvider> provider = nullptr);

 private:
  CollectionName name_;
  std::shared_ptr<const EmbeddingProvider> provider_;
  std::vector<CollectionEntry> entries_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::unique_ptr<std::shared_mutex> mutex_ = std::make_unique<std::shared_mutex>();
};

// Exclusive ownership of a collection directory for the lifetime of the object.
class DirectoryLock {
 public:
  explicit DirectoryLock(const std::filesystem::path& dir);
  ~DirectoryLock();
  DirectoryLock(const DirectoryLock&) = delete;
  DirectoryLock& operator=(const DirectoryLock&) = delete;

 private:
  std::filesystem::path lock_path_;
};

}  // namespace cello

#include "cello/vector_index.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <mutex>

#include <json.hpp>

#include "cello/error.hpp"
#include "cello/hash.hpp"

namespace fs = std::filesystem;

namespace cello {

namespace {

bool ranks_before(const ScoredHit& a, const ScoredHit& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.chunk_id < b.chunk_id;
}

std::uint32_t to_little_endian(std::uint32_t v) {
  if constexpr (std::endian::native == std::endian::little) return v;
  return ((v & 0xFFu) << 24) | ((v & 0xFF00u) << 8) | ((v >> 8) & 0xFF00u) | (v >> 24);
}

}  // namespace

std::string_view to_string(CollectionName name) { return name == CollectionName::Code ? "code" : "text"; }

CollectionName parse_collection_name(std::string_view s) {
  if (s == "code") return CollectionName::Code;
  if (s == "text") return CollectionName::Text;
  throw InputError("unknown collection: " + std::string(s));
}

DirectoryLock::DirectoryLock(const fs::path& dir) : lock_path_(dir / ".lock") {
  fs::create_directories(dir);
  std::FILE* f = std::fopen(lock_path_.c_str(), "wx");
  if (f == nullptr) throw Error("collection directory is locked: " + lock_path_.string());
  std::fclose(f);
}

DirectoryLock::~DirectoryLock() {
  std::error_code ec;
  fs::remove(lock_path_, ec);
}

VectorCollection::VectorCollection(CollectionName name, std::shared_ptr<const EmbeddingProvider> provider)
    : name_(name), provider_(std::move(provider)) {
  if (!provider_) throw InputError("collection needs an embedding provider");
}

std::size_t VectorCollection::size() const {
  std::shared_lock lock(*mutex_);
  return entries_.size();
}

UpsertResult VectorCollection::upsert(const std::vector<Chunk>& chunks) {
  UpsertResult result;
  for (const auto& c : chunks) {
    if (!accepts(name_, c.kind))
      result.rejected.push_back({c.id, std::string(to_string(c.kind)) + " chunk cannot go into the " +
                                           std::string(to_string(name_)) + " collection"});
  }
  if (!result.rejected.empty()) return result;

  std::unique_lock lock(*mutex_);
  std::vector<const Chunk*> pending;
  std::vector<std::string> texts;
  std::unordered_map<std::string, std::size_t> batch;  // later duplicates in one batch win
  for (const auto& c : chunks) {
    const auto hash = fnv1a64(c.text);
    const auto it = by_id_.find(c.id);
    if (it != by_id_.end() && entries_[it->second].content_hash == hash) {
      ++result.unchanged;
      continue;
    }
    if (const auto b = batch.find(c.id); b != batch.end()) {
      pending[b->second] = &c;
      texts[b->second] = c.text;
      continue;
    }
    batch[c.id] = pending.size();
    pending.push_back(&c);
    texts.push_back(c.text);
  }
  if (pending.empty()) return result;

  auto vectors = provider_->embed(texts);
  if (vectors.size() != pending.size())
    throw ProviderContractError("provider returned " + std::to_string(vectors.size()) + " vectors for " +
                                std::to_string(pending.size()) + " inputs");
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const Chunk& c = *pending[i];
    auto& v = vectors[i];
    if (v.size() != dims()) throw ProviderContractError("provider returned a vector of the wrong size");
    normalize_l2(v);
    CollectionEntry entry{c.id, fnv1a64(c.text), std::move(v), {c.path, c.kind, c.symbol}, c.text};
    if (const auto it = by_id_.find(c.id); it != by_id_.end()) {
      entries_[it->second] = std::move(entry);
      ++result.updated;
    } else {
      by_id_[c.id] = entries_.size();
      entries_.push_back(std::move(entry));
      ++result.inserted;
    }
  }
  return result;
}

void VectorCollection::insert_vector(const std::string& chunk_id, Vector vector, EntryMetadata metadata,
                                     std::string text) {
  if (vector.size() != dims()) throw InputError("vector has " + std::to_string(vector.size()) + " dims, expected " +
                                                std::to_string(dims()));
  if (!accepts(name_, metadata.kind)) throw InputError("chunk kind does not match collection");
  normalize_l2(vector);
  std::unique_lock lock(*mutex_);
  CollectionEntry entry{chunk_id, fnv1a64(text), std::move(vector), std::move(metadata), std::move(text)};
  if (const auto it = by_id_.find(chunk_id); it != by_id_.end()) {
    entries_[it->second] = std::move(entry);
  } else {
    by_id_[chunk_id] = entries_.size();
    entries_.push_back(std::move(entry));
  }
}

std::vector<ScoredHit> VectorCollection::query_top_k(std::span<const float> query, std::size_t k) const {
  if (query.size() != dims())
    throw InputError("query has " + std::to_string(query.size()) + " dims, collection has " + std::to_string(dims()));
  if (k == 0) return {};
  Vector q(query.begin(), query.end());
  normalize_l2(q);

  std::shared_lock lock(*mutex_);
  std::vector<ScoredHit> hits;
  hits.reserve(entries_.size());
  for (const auto& e : entries_) hits.push_back({e.chunk_id, dot(q, e.vector), e.metadata});
  const std::size_t n = std::min(k, hits.size());
  std::partial_sort(hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(n), hits.end(), ranks_before);
  hits.resize(n);
  return hits;
}

std::vector<ScoredHit> VectorCollection::query_text(const std::string& text, std::size_t k) const {
  if (k == 0) return {};
  return query_top_k(provider_->embed_one(text), k);
}

std::optional<CollectionEntry> VectorCollection::find(const std::string& chunk_id) const {
  std::shared_lock lock(*mutex_);
  const auto it = by_id_.find(chunk_id);
  if (it == by_id_.end()) return std::nullopt;
  return entries_[it->second];
}

std::vector<std::string> VectorCollection::ids() const {
  std::shared_lock lock(*mutex_);
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.chunk_id);
  return out;
}

void VectorCollection::persist(const fs::path& dir) const {
  DirectoryLock dir_lock(dir);
  std::shared_lock lock(*mutex_);

  nlohmann::json manifest = {{"collection", to_string(name_)},
                             {"provider", provider_->name()},
                             {"dims", dims()},
                             {"count", entries_.size()}};
  if (const auto ep = provider_->endpoint()) manifest["endpoint"] = *ep;
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");

  std::string ids;
  for (const auto& e : entries_) {
    const nlohmann::json row = {{"id", e.chunk_id},
                                {"content_hash", to_hex(e.content_hash)},
                                {"path", e.metadata.path},
                                {"kind", to_string(e.metadata.kind)},
                                {"symbol", e.metadata.symbol ? nlohmann::json(*e.metadata.symbol) : nlohmann::json()},
                                {"text", e.text}};
    ids += row.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
    ids += '\n';
  }
  write_file(dir / "ids.jsonl", ids);

  std::string blob;
  blob.reserve(entries_.size() * dims() * 4);
  for (const auto& e : entries_) {
    for (const float x : e.vector) {
      const auto bits = to_little_endian(std::bit_cast<std::uint32_t>(x));
      char bytes[4];
      std::memcpy(bytes, &bits, 4);
      blob.append(bytes, 4);
    }
  }
  write_file(dir / "vectors.f32", blob);
}

VectorCollection VectorCollection::load(const fs::path& dir, std::shared_ptr<const EmbeddingProvider> provider) {
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_file(dir / "manifest.json"));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed collection manifest: ") + e.what());
  }
  const auto name = parse_collection_name(manifest.at("collection").get<std::string>());
  const auto dims = manifest.at("dims").get<std::size_t>();
  const auto count = manifest.at("count").get<std::size_t>();
  if (!provider) {
    std::optional<std::string> endpoint;
    if (manifest.contains("endpoint")) endpoint = manifest["endpoint"].get<std::string>();
    provider = make_provider(manifest.at("provider").get<std::string>(), dims, endpoint);
  }
  if (provider->dims() != dims)
    throw ProviderContractError("collection stores " + std::to_string(dims) + "-dim vectors but provider has " +
                                std::to_string(provider->dims()));

  const auto blob = read_file(dir / "vectors.f32");
  if (blob.size() != count * dims * 4) throw ParseError("vectors.f32 size does not match manifest");
  const auto rows = read_file(dir / "ids.jsonl");

  VectorCollection c(name, std::move(provider));
  std::size_t pos = 0;
  std::size_t row = 0;
  while (pos < rows.size()) {
    auto nl = rows.find('\n', pos);
    if (nl == std::string::npos) nl = rows.size();
    const auto line = std::string_view(rows).substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty()) continue;
    if (row >= count) throw ParseError("ids.jsonl has more rows than manifest count");
    try {
      const auto j = nlohmann::json::parse(line);
      CollectionEntry e;
      e.chunk_id = j.at("id").get<std::string>();
      e.content_hash = from_hex(j.at("content_hash").get<std::string>());
      e.metadata.path = j.at("path").get<std::string>();
      e.metadata.kind = parse_chunk_kind(j.at("kind").get<std::string>());
      if (!j.at("symbol").is_null()) e.metadata.symbol = j["symbol"].get<std::string>();
      e.text = j.value("text", "");
      e.vector.resize(dims);
      for (std::size_t d = 0; d < dims; ++d) {
        std::uint32_t bits;
        std::memcpy(&bits, blob.data() + (row * dims + d) * 4, 4);
        e.vector[d] = std::bit_cast<float>(to_little_endian(bits));
      }
      c.by_id_[e.chunk_id] = c.entries_.size();
      c.entries_.push_back(std::move(e));
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(std::string("malformed ids.jsonl row: ") + ex.what());
    }
    ++row;
  }
  if (row != count) throw ParseError("ids.jsonl has fewer rows than manifest count");
  return c;
}

}  // namespace cello

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cello/byte_range.hpp"
#include "cello/corpus.hpp"

namespace cello {

enum class ChunkKind { CodeRoutine, CodePreamble, CodeContinuation, Text };

std::string_view to_string(ChunkKind kind);
ChunkKind parse_chunk_kind(std::string_view s);

constexpr bool is_code(ChunkKind kind) noexcept { return kind != ChunkKind::Text; }

struct Chunk {
  std::string id;  // hex hash of path + span
  std::string path;
  ByteRange span;
  std::string text;
  ChunkKind kind = ChunkKind::CodeRoutine;
  std::optional<std::string> symbol;
  int part_index = 1;
  int part_total = 1;

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

std::string chunk_id(std::string_view path, ByteRange span);

struct ChunkLimits {
  std::size_t max_bytes = 4096;
};

struct ChunkResult {
  std::vector<Chunk> chunks;
  std::vector<std::string> warnings;
};

// Splits source along syntax-tree definition boundaries. A routine chunk also takes the
// comment lines directly above the definition. Throws InputError if limits.max_bytes < 256.
ChunkResult chunk_code(std::string_view source, std::string_view path, Language language,
                       const ChunkLimits& limits = {});

// Fixed character windows with `overlap` characters shared between neighbours. Characters
// are UTF-8 code points; spans are byte offsets. Throws InputError unless window > overlap.
std::vector<Chunk> chunk_text(std::string_view doc, std::string_view path, std::size_t window,
                              std::size_t overlap);

// The fixed-window baseline applied to code: chunk_text windows relabelled as an
// unnamed CodeContinuation chain.
std::vector<Chunk> chunk_code_fixed_window(std::string_view source, std::string_view path, std::size_t window,
                                           std::size_t overlap = 0);

struct TextWindow {
  std::size_t window = 2000;
  std::size_t overlap = 200;
};

// Chunks every file of a manifest (code by syntax, text by windows), in path order.
ChunkResult chunk_manifest(const CorpusManifest& manifest, const ChunkLimits& limits = {},
                           const TextWindow& text = {});

nlohmann::json to_json(const Chunk& chunk);
Chunk chunk_from_json(const nlohmann::json& j);

std::string dump_jsonl(const std::vector<Chunk>& chunks);
std::vector<Chunk> parse_jsonl(std::string_view jsonl);

}  // namespace cello

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cello {

enum class FileKind { Code, Text };

enum class Language { Cpp, Cuda, Hip, KokkosCpp, OpenMPCpp, Markdown, Plain };

std::string_view to_string(FileKind kind);
std::string_view to_string(Language language);
FileKind parse_file_kind(std::string_view s);
Language parse_language(std::string_view s);

constexpr bool is_code_language(Language l) noexcept {
  return l != Language::Markdown && l != Language::Plain;
}

struct Classification {
  FileKind kind;
  Language language;

  friend bool operator==(const Classification&, const Classification&) = default;
};

struct IngestConfig {
  // Extension (with leading dot, lowercase) -> classification.
  std::map<std::string, Classification> extensions = default_extensions();
  // Directory names that are never descended into. Entries ending in '*' match by prefix.
  std::set<std::string> excluded_dirs = {".git", ".hg", ".svn", "build", "_build", "cmake-build-*"};
  std::uintmax_t max_file_bytes = 8u * 1024u * 1024u;
  // Refine Cpp files into Kokkos-C++/OpenMP-C++ by content.
  bool sniff_programming_model = true;

  static std::map<std::string, Classification> default_extensions();
};

struct SourceFile {
  std::string path;  // relative to the manifest root, '/' separated
  FileKind kind = FileKind::Code;
  Language language = Language::Cpp;
  std::uint64_t byte_len = 0;
  std::uint64_t content_hash = 0;

  friend bool operator==(const SourceFile&, const SourceFile&) = default;
};

struct CorpusCounts {
  std::uint64_t code_files = 0;
  std::uint64_t text_files = 0;
  std::uint64_t code_lines = 0;
  std::uint64_t text_words = 0;

  friend bool operator==(const CorpusCounts&, const CorpusCounts&) = default;
};

struct SkippedFile {
  std::string path;
  std::string reason;
};

struct CorpusManifest {
  std::string root;
  std::vector<SourceFile> files;  // sorted by path
  CorpusCounts counts;

  // Bookkeeping from the walk; not serialized.
  std::uint64_t visited = 0;
  std::uint64_t excluded = 0;
  std::vector<SkippedFile> skipped;

  const SourceFile* find(std::string_view path) const;
  std::filesystem::path resolve(const SourceFile& file) const;
};

// Extension-only classification. std::nullopt means "excluded".
std::optional<Classification> classify_file(const std::filesystem::path& path,
                                            const IngestConfig& config = {});

// Walks `code_root` (and optionally a separate `text_root`) and builds a manifest whose paths
// are relative to `code_root`. Throws InputError when a root is missing or unreadable.
CorpusManifest scan_repository(const std::filesystem::path& code_root,
                               const IngestConfig& config = {},
                               const std::optional<std::filesystem::path>& text_root = std::nullopt);

std::uint64_t count_lines(std::string_view bytes);
std::uint64_t count_words(std::string_view bytes);

nlohmann::json to_json(const CorpusManifest& manifest);
CorpusManifest manifest_from_json(const nlohmann::json& j);

// Serialized form written by `cello ingest`; stable byte-for-byte for an unchanged tree.
std::string dump_manifest(const CorpusManifest& manifest);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace cello

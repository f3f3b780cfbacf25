#include "cello/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>

#include "cello/error.hpp"
#include "cello/hash.hpp"

namespace fs = std::filesystem;

namespace cello {

namespace {

struct LanguageName {
  Language language;
  std::string_view name;
};

constexpr LanguageName kLanguageNames[] = {
    {Language::Cpp, "Cpp"},
    {Language::Cuda, "Cuda"},
    {Language::Hip, "Hip"},
    {Language::KokkosCpp, "Kokkos-C++"},
    {Language::OpenMPCpp, "OpenMP-C++"},
    {Language::Markdown, "Markdown"},
    {Language::Plain, "Plain"},
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool dir_excluded(const std::string& name, const std::set<std::string>& patterns) {
  for (const auto& p : patterns) {
    if (!p.empty() && p.back() == '*') {
      if (name.compare(0, p.size() - 1, p, 0, p.size() - 1) == 0) return true;
    } else if (name == p) {
      return true;
    }
  }
  return false;
}

Language sniff(Language language, std::string_view bytes) {
  if (language != Language::Cpp) return language;
  if (bytes.find("Kokkos::") != std::string_view::npos) return Language::KokkosCpp;
  if (bytes.find("pragma omp") != std::string_view::npos) return Language::OpenMPCpp;
  return language;
}

struct Candidate {
  std::string rel;
  fs::path abs;
};

void walk(const fs::path& root, const fs::path& base, const IngestConfig& config,
          std::vector<Candidate>& out, CorpusManifest& manifest) {
  std::error_code ec;
  fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
  if (ec) throw InputError("cannot read root " + root.string() + ": " + ec.message());
  for (const fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
    if (ec) {
      manifest.skipped.push_back({it->path().string(), ec.message()});
      ec.clear();
      continue;
    }
    const auto& entry = *it;
    const auto name = entry.path().filename().string();
    if (entry.is_directory(ec)) {
      if (dir_excluded(name, config.excluded_dirs)) it.disable_recursion_pending();
      continue;
    }
    if (!entry.is_regular_file(ec)) continue;
    out.push_back({entry.path().lexically_relative(base).generic_string(), entry.path()});
  }
}

}  // namespace

std::string_view to_string(FileKind kind) { return kind == FileKind::Code ? "Code" : "Text"; }

std::string_view to_string(Language language) {
  for (const auto& [l, n] : kLanguageNames)
    if (l == language) return n;
  return "Cpp";
}

FileKind parse_file_kind(std::string_view s) {
  if (s == "Code") return FileKind::Code;
  if (s == "Text") return FileKind::Text;
  throw ParseError("unknown file kind: " + std::string(s));
}

Language parse_language(std::string_view s) {
  for (const auto& [l, n] : kLanguageNames)
    if (n == s) return l;
  throw ParseError("unknown language: " + std::string(s));
}

std::map<std::string, Classification> IngestConfig::default_extensions() {
  std::map<std::string, Classification> m;
  for (const char* ext : {".c", ".cc", ".cpp", ".cxx", ".h", ".hh", ".hpp"})
    m[ext] = {FileKind::Code, Language::Cpp};
  m[".cu"] = m[".cuh"] = {FileKind::Code, Language::Cuda};
  m[".hip"] = {FileKind::Code, Language::Hip};
  m[".md"] = {FileKind::Text, Language::Markdown};
  m[".txt"] = {FileKind::Text, Language::Plain};
  return m;
}

std::optional<Classification> classify_file(const fs::path& path, const IngestConfig& config) {
  const auto it = config.extensions.find(lower(path.extension().string()));
  if (it == config.extensions.end()) return std::nullopt;
  return it->second;
}

std::uint64_t count_lines(std::string_view bytes) {
  return static_cast<std::uint64_t>(std::count(bytes.begin(), bytes.end(), '\n'));
}

std::uint64_t count_words(std::string_view bytes) {
  std::uint64_t words = 0;
  bool in_word = false;
  for (const unsigned char c : bytes) {
    const bool space = std::isspace(c) != 0;
    if (!space && !in_word) ++words;
    in_word = !space;
  }
  return words;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw InputError("read failed: " + path.string());
  return bytes;
}

void write_file(const fs::path& path, std::string_view bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw InputError("write failed: " + path.string());
}

const SourceFile* CorpusManifest::find(std::string_view path) const {
  const auto it = std::lower_bound(files.begin(), files.end(), path,
                                   [](const SourceFile& f, std::string_view p) { return f.path < p; });
  return it != files.end() && it->path == path ? &*it : nullptr;
}

fs::path CorpusManifest::resolve(const SourceFile& file) const {
  return (fs::path(root) / file.path).lexically_normal();
}

CorpusManifest scan_repository(const fs::path& code_root, const IngestConfig& config,
                               const std::optional<fs::path>& text_root) {
  CorpusManifest manifest;
  std::error_code ec;
  if (!fs::is_directory(code_root, ec)) throw InputError("root is not a readable directory: " + code_root.string());
  if (text_root && !fs::is_directory(*text_root, ec))
    throw InputError("text root is not a readable directory: " + text_root->string());
  manifest.root = code_root.generic_string();

  std::vector<Candidate> candidates;
  walk(code_root, code_root, config, candidates, manifest);
  if (text_root) walk(*text_root, code_root, config, candidates, manifest);

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.rel < b.rel; });
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [](const Candidate& a, const Candidate& b) { return a.rel == b.rel; }),
                   candidates.end());

  for (const auto& c : candidates) {
    ++manifest.visited;
    const auto cls = classify_file(c.abs, config);
    if (!cls) {
      ++manifest.excluded;
      continue;
    }
    const auto size = fs::file_size(c.abs, ec);
    if (ec) {
      manifest.skipped.push_back({c.rel, ec.message()});
      ++manifest.excluded;
      ec.clear();
      continue;
    }
    if (size > config.max_file_bytes) {
      ++manifest.excluded;
      continue;
    }
    std::string bytes;
    try {
      bytes = read_file(c.abs);
    } catch (const InputError& e) {
      manifest.skipped.push_back({c.rel, e.what()});
      ++manifest.excluded;
      continue;
    }
    SourceFile f;
    f.path = c.rel;
    f.kind = cls->kind;
    f.language = config.sniff_programming_model ? sniff(cls->language, bytes) : cls->language;
    f.byte_len = bytes.size();
    f.content_hash = fnv1a64(bytes);
    if (f.kind == FileKind::Code) {
      ++manifest.counts.code_files;
      manifest.counts.code_lines += count_lines(bytes);
    } else {
      ++manifest.counts.text_files;
      manifest.counts.text_words += count_words(bytes);
    }
    manifest.files.push_back(std::move(f));
  }
  return manifest;
}

nlohmann::json to_json(const CorpusManifest& manifest) {
  nlohmann::json files = nlohmann::json::array();
  for (const auto& f : manifest.files) {
    files.push_back({{"path", f.path},
                     {"kind", to_string(f.kind)},
                     {"language", to_string(f.language)},
                     {"byte_len", f.byte_len},
                     {"content_hash", to_hex(f.content_hash)}});
  }
  return {{"root", manifest.root},
          {"files", std::move(files)},
          {"counts",
           {{"code_files", manifest.counts.code_files},
            {"text_files", manifest.counts.text_files},
            {"code_lines", manifest.counts.code_lines},
            {"text_words", manifest.counts.text_words}}}};
}

CorpusManifest manifest_from_json(const nlohmann::json& j) {
  CorpusManifest m;
  try {
    m.root = j.at("root").get<std::string>();
    for (const auto& f : j.at("files")) {
      SourceFile s;
      s.path = f.at("path").get<std::string>();
      s.kind = parse_file_kind(f.at("kind").get<std::string>());
      s.language = parse_language(f.at("language").get<std::string>());
      s.byte_len = f.at("byte_len").get<std::uint64_t>();
      s.content_hash = from_hex(f.at("content_hash").get<std::string>());
      m.files.push_back(std::move(s));
    }
    const auto& c = j.at("counts");
    m.counts = {c.at("code_files").get<std::uint64_t>(), c.at("text_files").get<std::uint64_t>(),
                c.at("code_lines").get<std::uint64_t>(), c.at("text_words").get<std::uint64_t>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed manifest: ") + e.what());
  }
  std::sort(m.files.begin(), m.files.end(),
            [](const SourceFile& a, const SourceFile& b) { return a.path < b.path; });
  return m;
}

std::string dump_manifest(const CorpusManifest& manifest) {
  return to_json(manifest).dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

}  // namespace cello

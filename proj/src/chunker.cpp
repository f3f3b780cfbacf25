#include "cello/chunker.hpp"

#include <algorithm>
#include <sstream>

#include "cello/error.hpp"
#include "cello/hash.hpp"
#include "cello/syntax.hpp"

namespace cello {

namespace {

using syntax::TokenKind;

struct KindName {
  ChunkKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {ChunkKind::CodeRoutine, "CodeRoutine"},
    {ChunkKind::CodePreamble, "CodePreamble"},
    {ChunkKind::CodeContinuation, "CodeContinuation"},
    {ChunkKind::Text, "Text"},
};

bool blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

Chunk make_chunk(std::string_view source, std::string_view path, ByteRange span, ChunkKind kind) {
  Chunk c;
  c.path = std::string(path);
  c.span = span;
  c.id = chunk_id(path, span);
  c.text = std::string(source.substr(span.begin, span.size()));
  c.kind = kind;
  return c;
}

// Offset at most `limit` bytes past `from` that does not split a UTF-8 sequence, preferring
// the byte after the last newline in range.
std::size_t hard_split(std::string_view source, std::size_t from, std::size_t limit) {
  std::size_t cut = std::min(source.size(), from + limit);
  if (cut == source.size()) return cut;
  const auto nl = source.rfind('\n', cut - 1);
  if (nl != std::string_view::npos && nl >= from && nl + 1 > from) return nl + 1;
  while (cut > from + 1 && (static_cast<unsigned char>(source[cut]) & 0xC0) == 0x80) --cut;
  return cut;
}

class CodeChunker {
 public:
  CodeChunker(std::string_view source, std::string_view path, const ChunkLimits& limits)
      : src_(source), path_(path), limits_(limits), tree_(syntax::parse(source)) {}

  ChunkResult run() {
    const auto routines = syntax::routine_definitions(tree_);
    if (routines.empty() && tree_.error_count > 0) {
      result_.warnings.push_back(std::string(path_) + ": no parseable definitions (" +
                                 std::to_string(tree_.error_count) +
                                 " syntax errors); using fixed windows");
      result_.chunks = chunk_code_fixed_window(src_, path_, limits_.max_bytes, 0);
      return std::move(result_);
    }
    std::size_t cursor = 0;
    for (const auto* r : routines) {
      const std::size_t begin = leading_comments(r->range.begin, cursor);
      gap({cursor, begin});
      routine(*r, {begin, r->range.end});
      cursor = r->range.end;
    }
    gap({cursor, src_.size()});
    return std::move(result_);
  }

 private:
  // Start of the comment lines directly above `begin` (each on its own line, nothing but
  // whitespace in between), never before `floor`.
  std::size_t leading_comments(std::size_t begin, std::size_t floor) const {
    const auto& toks = tree_.tokens;
    auto it = std::lower_bound(toks.begin(), toks.end(), begin,
                               [](const syntax::Token& t, std::size_t off) { return t.range.begin < off; });
    std::size_t start = begin;
    while (it != toks.begin()) {
      const auto& t = *std::prev(it);
      if (t.kind != TokenKind::Comment || t.range.begin < floor) break;
      const auto between = src_.substr(t.range.end, start - t.range.end);
      if (between.find_first_not_of(" \t\r\n") != std::string_view::npos) break;
      const auto line = src_.rfind('\n', t.range.begin == 0 ? 0 : t.range.begin - 1);
      const std::size_t ls = line == std::string_view::npos || t.range.begin == 0 ? 0 : line + 1;
      if (src_.substr(ls, t.range.begin - ls).find_first_not_of(" \t") != std::string_view::npos) break;
      start = t.range.begin;
      --it;
    }
    return start;
  }

  void routine(const syntax::SyntaxNode& node, ByteRange range) {
    if (node.error) {
      result_.warnings.push_back(std::string(path_) + ": unterminated definition '" + node.qualified +
                                 "' at byte " + std::to_string(node.range.begin) + "; using fixed windows");
      chain(range, split_points(range, /*syntax_aware=*/false), node.qualified);
      return;
    }
    if (range.size() <= limits_.max_bytes) {
      auto c = make_chunk(src_, path_, range, ChunkKind::CodeRoutine);
      if (!node.qualified.empty()) c.symbol = node.qualified;
      result_.chunks.push_back(std::move(c));
      return;
    }
    chain(range, split_points(range, true), node.qualified);
  }

  // Statement boundaries inside `range`: just past ';', '{' and '}' (and the rest of their line
  // when it is blank).
  std::vector<std::size_t> split_points(ByteRange range, bool syntax_aware) const {
    std::vector<std::size_t> points;
    if (!syntax_aware) return points;
    for (const auto& t : tree_.tokens) {
      if (t.range.begin < range.begin) continue;
      if (t.range.end >= range.end) break;
      if (t.kind != TokenKind::Punct || t.directive >= 0 || t.range.size() != 1) continue;
      const char c = src_[t.range.begin];
      if (c != ';' && c != '{' && c != '}') continue;
      std::size_t p = t.range.end;
      std::size_t q = p;
      while (q < range.end && (src_[q] == ' ' || src_[q] == '\t' || src_[q] == '\r')) ++q;
      if (q < range.end && src_[q] == '\n') p = q + 1;
      if (p < range.end) points.push_back(p);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
  }

  void chain(ByteRange range, const std::vector<std::size_t>& points, const std::string& symbol) {
    std::vector<ByteRange> parts;
    std::size_t start = range.begin;
    while (start < range.end) {
      const std::size_t limit = start + limits_.max_bytes;
      std::size_t cut = range.end;
      if (range.end > limit) {
        auto it = std::upper_bound(points.begin(), points.end(), limit);
        if (it != points.begin() && *std::prev(it) > start) {
          cut = *std::prev(it);
        } else {
          cut = std::min(range.end, hard_split(src_, start, limits_.max_bytes));
          if (cut <= start) cut = std::min(range.end, limit);
        }
      }
      parts.push_back({start, cut});
      start = cut;
    }
    const int total = static_cast<int>(parts.size());
    for (int i = 0; i < total; ++i) {
      auto c = make_chunk(src_, path_, parts[static_cast<std::size_t>(i)], ChunkKind::CodeContinuation);
      if (!symbol.empty()) c.symbol = symbol;
      c.part_index = i + 1;
      c.part_total = total;
      result_.chunks.push_back(std::move(c));
    }
  }

  void gap(ByteRange range) {
    if (range.empty()) return;
    bool significant = false;
    for (std::size_t i = 0; i < tree_.tokens.size() && !significant; ++i) {
      const auto& t = tree_.tokens[i];
      if (t.range.begin < range.begin) continue;
      if (t.range.end > range.end) break;
      if (t.kind == TokenKind::Comment || tree_.scaffolding[i]) continue;
      significant = true;
    }
    if (!significant) return;
    while (range.begin < range.end && blank(src_[range.begin])) ++range.begin;
    while (range.end > range.begin && blank(src_[range.end - 1])) --range.end;
    while (!range.empty()) {
      const std::size_t cut =
          range.size() <= limits_.max_bytes ? range.end : hard_split(src_, range.begin, limits_.max_bytes);
      result_.chunks.push_back(make_chunk(src_, path_, {range.begin, cut}, ChunkKind::CodePreamble));
      range.begin = cut;
    }
  }

  std::string_view src_;
  std::string_view path_;
  ChunkLimits limits_;
  syntax::SyntaxTree tree_;
  ChunkResult result_;
};

}  // namespace

std::string_view to_string(ChunkKind kind) {
  for (const auto& [k, n] : kKindNames)
    if (k == kind) return n;
  return "Text";
}

ChunkKind parse_chunk_kind(std::string_view s) {
  for (const auto& [k, n] : kKindNames)
    if (n == s) return k;
  throw ParseError("unknown chunk kind: " + std::string(s));
}

std::string chunk_id(std::string_view path, ByteRange span) {
  std::string key(path);
  key += ':';
  key += std::to_string(span.begin);
  key += '-';
  key += std::to_string(span.end);
  return to_hex(fnv1a64(key));
}

ChunkResult chunk_code(std::string_view source, std::string_view path, Language language,
                       const ChunkLimits& limits) {
  if (limits.max_bytes < 256) throw InputError("chunk limit must be at least 256 bytes");
  if (!is_code_language(language)) throw InputError("chunk_code called with a text language");
  return CodeChunker(source, path, limits).run();
}

std::vector<Chunk> chunk_text(std::string_view doc, std::string_view path, std::size_t window,
                              std::size_t overlap) {
  if (window == 0 || overlap >= window) throw InputError("text window must exceed overlap");
  std::vector<Chunk> out;
  if (doc.empty()) return out;

  std::vector<std::size_t> starts;  // code point start offsets
  starts.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i)
    if ((static_cast<unsigned char>(doc[i]) & 0xC0) != 0x80 || i == 0) starts.push_back(i);
  const std::size_t n = starts.size();
  auto offset = [&](std::size_t cp) { return cp >= n ? doc.size() : starts[cp]; };

  const std::size_t step = window - overlap;
  for (std::size_t cp = 0;; cp += step) {
    const std::size_t end_cp = std::min(n, cp + window);
    auto c = make_chunk(doc, path, {offset(cp), offset(end_cp)}, ChunkKind::Text);
    out.push_back(std::move(c));
    if (end_cp == n) break;
  }
  return out;
}

std::vector<Chunk> chunk_code_fixed_window(std::string_view source, std::string_view path, std::size_t window,
                                           std::size_t overlap) {
  auto chunks = chunk_text(source, path, window, overlap);
  const int total = static_cast<int>(chunks.size());
  for (int i = 0; i < total; ++i) {
    auto& c = chunks[static_cast<std::size_t>(i)];
    c.kind = ChunkKind::CodeContinuation;
    c.part_index = i + 1;
    c.part_total = total;
  }
  return chunks;
}

ChunkResult chunk_manifest(const CorpusManifest& manifest, const ChunkLimits& limits, const TextWindow& text) {
  ChunkResult all;
  for (const auto& file : manifest.files) {
    std::string bytes;
    try {
      bytes = read_file(manifest.resolve(file));
    } catch (const InputError& e) {
      all.warnings.push_back(file.path + ": " + e.what());
      continue;
    }
    if (file.kind == FileKind::Code) {
      auto r = chunk_code(bytes, file.path, file.language, limits);
      std::move(r.chunks.begin(), r.chunks.end(), std::back_inserter(all.chunks));
      std::move(r.warnings.begin(), r.warnings.end(), std::back_inserter(all.warnings));
    } else {
      auto r = chunk_text(bytes, file.path, text.window, text.overlap);
      std::move(r.begin(), r.end(), std::back_inserter(all.chunks));
    }
  }
  return all;
}

nlohmann::json to_json(const Chunk& c) {
  return {{"id", c.id},
          {"path", c.path},
          {"span", {c.span.begin, c.span.end}},
          {"text", c.text},
          {"kind", to_string(c.kind)},
          {"symbol", c.symbol ? nlohmann::json(*c.symbol) : nlohmann::json(nullptr)},
          {"part_index", c.part_index},
          {"part_total", c.part_total}};
}

Chunk chunk_from_json(const nlohmann::json& j) {
  try {
    Chunk c;
    c.id = j.at("id").get<std::string>();
    c.path = j.at("path").get<std::string>();
    c.span = {j.at("span").at(0).get<std::size_t>(), j.at("span").at(1).get<std::size_t>()};
    c.text = j.at("text").get<std::string>();
    c.kind = parse_chunk_kind(j.at("kind").get<std::string>());
    if (j.contains("symbol") && !j["symbol"].is_null()) c.symbol = j["symbol"].get<std::string>();
    c.part_index = j.value("part_index", 1);
    c.part_total = j.value("part_total", 1);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed chunk: ") + e.what());
  }
}

std::string dump_jsonl(const std::vector<Chunk>& chunks) {
  std::string out;
  for (const auto& c : chunks) {
    out += to_json(c).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

std::vector<Chunk> parse_jsonl(std::string_view jsonl) {
  std::vector<Chunk> out;
  std::size_t pos = 0;
  while (pos < jsonl.size()) {
    auto nl = jsonl.find('\n', pos);
    if (nl == std::string_view::npos) nl = jsonl.size();
    const auto line = jsonl.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("malformed JSON line: ") + e.what());
    }
    out.push_back(chunk_from_json(j));
  }
  return out;
}

}  // namespace cello

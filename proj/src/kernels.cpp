#include "cello/kernels.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "cello/error.hpp"
#include "cello/syntax.hpp"

namespace cello {

std::string_view to_string(Paradigm paradigm) {
  switch (paradigm) {
    case Paradigm::CUDA: return "CUDA";
    case Paradigm::Kokkos: return "Kokkos";
    case Paradigm::OpenMP: return "OpenMP";
  }
  return "CUDA";
}

Paradigm parse_paradigm(std::string_view s) {
  std::string l(s);
  std::transform(l.begin(), l.end(), l.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (l == "cuda") return Paradigm::CUDA;
  if (l == "kokkos") return Paradigm::Kokkos;
  if (l == "openmp") return Paradigm::OpenMP;
  throw InputError("unknown paradigm: " + std::string(s));
}

KernelPattern KernelPattern::for_paradigm(Paradigm paradigm) {
  switch (paradigm) {
    case Paradigm::CUDA: return {paradigm, {"__global__", "__device__"}};
    case Paradigm::Kokkos: return {paradigm, {"Kokkos::parallel_for"}};
    case Paradigm::OpenMP: return {paradigm, {"pragma omp target"}};
  }
  return {paradigm, {}};
}

namespace {

struct Owner {
  std::string name;
  bool definition = false;
};

// Routine that owns `pos`. Markers outside a function definition (prototypes, __device__
// variables, macro definitions) keep the nearest declared name but are not definitions. The
// chunk is parsed on its own, so the namespace part of the chunk's symbol is restored in front
// of the locally qualified name.
Owner owner_of(const Chunk& chunk, std::optional<syntax::SyntaxTree>& tree, std::size_t pos) {
  const bool tail_part = chunk.kind == ChunkKind::CodeContinuation && chunk.part_index > 1;
  if (tail_part && chunk.symbol) return {*chunk.symbol, true};
  if (!tree) tree = syntax::parse(chunk.text);
  const auto* owner = syntax::enclosing_named(*tree, pos);
  if (owner == nullptr) return {chunk.symbol.value_or("<unnamed>"), false};
  const bool definition = owner->kind == syntax::NodeKind::Function;
  if (!chunk.symbol) return {owner->qualified, definition};
  const auto top = std::find_if(tree->nodes.begin(), tree->nodes.end(),
                                [&](const syntax::SyntaxNode& n) { return n.range.contains(pos); });
  const auto& symbol = *chunk.symbol;
  if (top != tree->nodes.end() && !top->name.empty() && symbol.size() >= top->name.size() &&
      symbol.compare(symbol.size() - top->name.size(), top->name.size(), top->name) == 0) {
    return {symbol.substr(0, symbol.size() - top->name.size()) + owner->qualified, definition};
  }
  return {owner->qualified, definition};
}

}  // namespace

KernelScan find_kernels(const std::vector<Chunk>& chunks, const KernelPattern& pattern) {
  std::vector<KernelRef> refs;
  for (const auto& chunk : chunks) {
    if (!is_code(chunk.kind)) continue;
    const auto masked = syntax::mask_comments_and_strings(chunk.text);
    std::optional<syntax::SyntaxTree> tree;
    for (const auto& marker : pattern.identifiers) {
      if (marker.empty()) continue;
      for (auto pos = masked.find(marker); pos != std::string::npos; pos = masked.find(marker, pos + 1)) {
        auto owner = owner_of(chunk, tree, pos);
        refs.push_back({std::move(owner.name), chunk.path, pattern.paradigm,
                        {chunk.span.begin + pos, chunk.span.begin + pos + marker.size()}, owner.definition});
      }
    }
  }
  std::sort(refs.begin(), refs.end(), [](const KernelRef& a, const KernelRef& b) {
    return std::tie(a.path, a.marker_span, a.name) < std::tie(b.path, b.marker_span, b.name);
  });
  refs.erase(std::unique(refs.begin(), refs.end(),
                         [](const KernelRef& a, const KernelRef& b) {
                           return a.path == b.path && a.marker_span == b.marker_span;
                         }),
             refs.end());

  std::set<KernelName> distinct;
  for (const auto& r : refs)
    if (r.in_definition) distinct.insert({r.name, r.path});
  return {std::move(refs), {distinct.begin(), distinct.end()}};
}

nlohmann::json to_json(const KernelScan& scan, Paradigm paradigm) {
  nlohmann::json refs = nlohmann::json::array();
  for (const auto& r : scan.refs)
    refs.push_back({{"name", r.name},
                    {"path", r.path},
                    {"paradigm", to_string(r.paradigm)},
                    {"marker_span", {r.marker_span.begin, r.marker_span.end}},
                    {"in_definition", r.in_definition}});
  nlohmann::json kernels = nlohmann::json::array();
  for (const auto& k : scan.kernels) kernels.push_back({{"name", k.name}, {"path", k.path}});
  return {{"paradigm", to_string(paradigm)}, {"count", scan.kernels.size()}, {"kernels", kernels}, {"refs", refs}};
}

}  // namespace cello

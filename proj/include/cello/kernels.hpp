#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cello/byte_range.hpp"
#include "cello/chunker.hpp"

namespace cello {

enum class Paradigm { CUDA, Kokkos, OpenMP };

std::string_view to_string(Paradigm paradigm);
// Accepts "CUDA"/"cuda", "Kokkos"/"kokkos", "OpenMP"/"openmp".
Paradigm parse_paradigm(std::string_view s);

struct KernelPattern {
  Paradigm paradigm = Paradigm::CUDA;
  std::vector<std::string> identifiers;

  static KernelPattern for_paradigm(Paradigm paradigm);
};

struct KernelRef {
  std::string name;
  std::string path;
  Paradigm paradigm = Paradigm::CUDA;
  ByteRange marker_span;  // file offsets of the matched identifier
  bool in_definition = false;  // inside a function definition rather than a prototype, variable or macro

  friend bool operator==(const KernelRef&, const KernelRef&) = default;
};

struct KernelName {
  std::string name;
  std::string path;

  friend bool operator==(const KernelName&, const KernelName&) = default;
  friend auto operator<=>(const KernelName&, const KernelName&) = default;
};

struct KernelScan {
  std::vector<KernelRef> refs;      // one per marker occurrence, sorted by (path, marker_span)
  std::vector<KernelName> kernels;  // distinct (name, path) of in-definition refs, sorted
};

// Markers are matched literally and case-sensitively after comments and string literals have
// been blanked out; every remaining occurrence is a ref. Only refs inside a function definition
// name a kernel. Overlapping chunks that cover the same file bytes yield one ref.
KernelScan find_kernels(const std::vector<Chunk>& chunks, const KernelPattern& pattern);

nlohmann::json to_json(const KernelScan& scan, Paradigm paradigm);

}  // namespace cello

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cello {

inline constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

// 64-bit FNV-1a. Stable across platforms and runs.
constexpr std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = kFnvOffset) noexcept {
  std::uint64_t h = seed;
  for (const char c : bytes) {
    h ^= static_cast<std::uint8_t>(c);
    h *= kFnvPrime;
  }
  return h;
}

// 16 lowercase hex digits.
std::string to_hex(std::uint64_t value);

// Inverse of to_hex; exactly 16 hex digits.
std::uint64_t from_hex(std::string_view hex);

}  // namespace cello

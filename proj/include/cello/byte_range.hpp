#pragma once

#include <cstddef>

namespace cello {

// Half-open byte interval [begin, end) within a source buffer.
struct ByteRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  constexpr std::size_t size() const noexcept { return end - begin; }
  constexpr bool empty() const noexcept { return end <= begin; }
  constexpr bool contains(std::size_t offset) const noexcept { return offset >= begin && offset < end; }
  constexpr bool contains(const ByteRange& other) const noexcept {
    return other.begin >= begin && other.end <= end;
  }
  constexpr bool overlaps(const ByteRange& other) const noexcept {
    return begin < other.end && other.begin < end;
  }

  friend constexpr bool operator==(const ByteRange&, const ByteRange&) = default;
  friend constexpr auto operator<=>(const ByteRange&, const ByteRange&) = default;
};

}  // namespace cello

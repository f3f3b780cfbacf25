#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cello {

enum class EditOp { Keep, Insert, Delete };

struct LineEdit {
  EditOp op;
  std::size_t old_line;  // 0-based; meaningful for Keep and Delete
  std::size_t new_line;  // 0-based; meaningful for Keep and Insert
};

// Lines including their trailing '\n' (the last one may lack it).
std::vector<std::string_view> split_lines(std::string_view text);

// Shortest edit script between two line sequences (Myers).
std::vector<LineEdit> diff_lines(const std::vector<std::string_view>& a, const std::vector<std::string_view>& b);

// Unified diff with `context` lines around each change; empty when the inputs are equal.
std::string unified_diff(std::string_view before, std::string_view after, std::string_view old_name,
                         std::string_view new_name, std::size_t context = 3);

}  // namespace cello

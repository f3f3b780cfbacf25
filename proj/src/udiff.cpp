#include "cello/udiff.hpp"

#include <algorithm>

namespace cello {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl + 1;
    lines.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  return lines;
}

std::vector<LineEdit> diff_lines(const std::vector<std::string_view>& a, const std::vector<std::string_view>& b) {
  const auto n = static_cast<long>(a.size());
  const auto m = static_cast<long>(b.size());
  const long max = n + m;
  const long offset = max + 1;
  std::vector<long> v(static_cast<std::size_t>(2 * max + 3), 0);
  std::vector<std::vector<long>> trace;

  long d_found = 0;
  for (long d = 0; d <= max; ++d) {
    trace.push_back(v);
    bool done = false;
    for (long k = -d; k <= d; k += 2) {
      long x;
      if (k == -d || (k != d && v[offset + k - 1] < v[offset + k + 1]))
        x = v[offset + k + 1];
      else
        x = v[offset + k - 1] + 1;
      long y = x - k;
      while (x < n && y < m && a[x] == b[y]) ++x, ++y;
      v[offset + k] = x;
      if (x >= n && y >= m) {
        done = true;
        break;
      }
    }
    if (done) {
      d_found = d;
      break;
    }
  }

  std::vector<LineEdit> edits;
  long x = n, y = m;
  for (long d = d_found; d > 0; --d) {
    const auto& pv = trace[static_cast<std::size_t>(d)];
    const long k = x - y;
    const bool down = k == -d || (k != d && pv[offset + k - 1] < pv[offset + k + 1]);
    const long pk = down ? k + 1 : k - 1;
    const long px = pv[offset + pk];
    const long py = px - pk;
    while (x > px + (down ? 0 : 1) && y > py + (down ? 1 : 0)) {
      --x, --y;
      edits.push_back({EditOp::Keep, static_cast<std::size_t>(x), static_cast<std::size_t>(y)});
    }
    if (down) {
      --y;
      edits.push_back({EditOp::Insert, static_cast<std::size_t>(x), static_cast<std::size_t>(y)});
    } else {
      --x;
      edits.push_back({EditOp::Delete, static_cast<std::size_t>(x), static_cast<std::size_t>(y)});
    }
  }
  while (x > 0 && y > 0) {
    --x, --y;
    edits.push_back({EditOp::Keep, static_cast<std::size_t>(x), static_cast<std::size_t>(y)});
  }
  std::reverse(edits.begin(), edits.end());
  return edits;
}

namespace {

void emit_line(std::string& out, char tag, std::string_view line) {
  out += tag;
  out.append(line);
  if (line.empty() || line.back() != '\n') out += "\n\\ No newline at end of file\n";
}

std::string range_header(std::size_t start, std::size_t count) {
  // unified format numbers from 1; an empty range points at the line before it
  const std::size_t first = count == 0 ? start : start + 1;
  return count == 1 ? std::to_string(first) : std::to_string(first) + "," + std::to_string(count);
}

}  // namespace

std::string unified_diff(std::string_view before, std::string_view after, std::string_view old_name,
                         std::string_view new_name, std::size_t context) {
  const auto a = split_lines(before);
  const auto b = split_lines(after);
  const auto edits = diff_lines(a, b);
  if (std::all_of(edits.begin(), edits.end(), [](const LineEdit& e) { return e.op == EditOp::Keep; })) return {};

  std::string out = "--- " + std::string(old_name) + "\n+++ " + std::string(new_name) + "\n";
  std::size_t i = 0;
  while (i < edits.size()) {
    while (i < edits.size() && edits[i].op == EditOp::Keep) ++i;
    if (i == edits.size()) break;
    std::size_t start = i >= context ? i - context : 0;
    std::size_t end = i;
    // extend the hunk while changes are separated by at most 2*context kept lines
    while (end < edits.size()) {
      std::size_t j = end;
      while (j < edits.size() && edits[j].op != EditOp::Keep) ++j;
      std::size_t keep = j;
      while (keep < edits.size() && edits[keep].op == EditOp::Keep) ++keep;
      if (keep == edits.size() || keep - j > 2 * context) {
        end = std::min(edits.size(), j + context);
        break;
      }
      end = keep;
    }
    std::size_t old_start = 0, new_start = 0, old_count = 0, new_count = 0;
    bool first_old = true, first_new = true;
    for (std::size_t e = start; e < end; ++e) {
      const auto& ed = edits[e];
      if (ed.op != EditOp::Insert) {
        if (first_old) old_start = ed.old_line, first_old = false;
        ++old_count;
      }
      if (ed.op != EditOp::Delete) {
        if (first_new) new_start = ed.new_line, first_new = false;
        ++new_count;
      }
    }
    if (first_old) old_start = edits[start].old_line;
    if (first_new) new_start = edits[start].new_line;
    out += "@@ -" + range_header(old_start, old_count) + " +" + range_header(new_start, new_count) + " @@\n";
    for (std::size_t e = start; e < end; ++e) {
      const auto& ed = edits[e];
      if (ed.op == EditOp::Keep) emit_line(out, ' ', a[ed.old_line]);
      else if (ed.op == EditOp::Delete) emit_line(out, '-', a[ed.old_line]);
      else emit_line(out, '+', b[ed.new_line]);
    }
    i = end;
  }
  return out;
}

}  // namespace cello

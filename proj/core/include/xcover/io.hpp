#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "xcover/instance.hpp"
#include "xcover/solve.hpp"

namespace xcover {

// Instance text format, one row per line:
//
//   # comment
//   %secondary s1 s2      (optional, before the first row)
//   %primary p1 p2        (optional, before the first row; fixes ordinals)
//   11 R1N1 C1N1
//
// Labels are separated by runs of spaces or tabs. Lines end in \n, \r\n or
// \r. Blank, comment and directive lines contribute no rows.

/// Parses an instance. Errors carry the 1-based line number. When
/// `warnings` is non-null, an EmptyInstance warning is appended for input
/// without rows.
Instance read_instance(std::istream& in, std::vector<Warning>* warnings = nullptr);
Instance read_instance(std::string_view text, std::vector<Warning>* warnings = nullptr);

/// Writes `instance` so that read_instance reproduces it exactly. Column
/// declarations are only emitted when row order alone would not.
void write_instance(std::ostream& out, const Instance& instance);
std::string write_instance(const Instance& instance);

/// "SOLUTION <ordinal>" followed by one line of labels per selected row.
std::string write_solution(const Solution& solution, std::uint64_t ordinal);

/// "key value" lines followed by "level <k> <count>" lines.
std::string write_stats(const SearchStats& stats);

/// Splits on runs of spaces and tabs.
std::vector<std::string_view> split_fields(std::string_view line);

/// Splits text into lines on \n, \r\n and \r.
std::vector<std::string_view> split_lines(std::string_view text);

/// Byte offset of the first invalid UTF-8 sequence, or npos.
std::size_t find_invalid_utf8(std::string_view text) noexcept;

}  // namespace xcover

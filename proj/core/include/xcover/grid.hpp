#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xcover/instance.hpp"

namespace xcover {

/// n x n array of symbols 1..n; 0 marks a blank cell. Rows and columns
/// are 1-based in the accessors, matching the column labels.
struct Grid {
  int n = 0;
  std::vector<int> cells;

  static Grid blank(int n) { return Grid{n, std::vector<int>(static_cast<std::size_t>(n) * n, 0)}; }

  int at(int row, int col) const { return cells[static_cast<std::size_t>(row - 1) * n + (col - 1)]; }
  int& at(int row, int col) { return cells[static_cast<std::size_t>(row - 1) * n + (col - 1)]; }

  int given_count() const;
  bool complete() const;

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Each symbol 1..n exactly once in every row and every column.
bool is_latin_square(const Grid& grid);

/// n lines of n space-separated symbols, '.' for blanks.
std::string format_grid(const Grid& grid);

namespace labels {

/// "ij" for n <= 9, "r{i}c{j}" beyond.
std::string cell(int i, int j, int n);
/// "{prefix}{a}N{v}", e.g. "R2N3".
std::string number(char prefix, int a, int v);
/// Inverse of number(): (a, v) when `label` has that shape.
std::optional<std::pair<int, int>> parse_number(std::string_view label, char prefix);

}  // namespace labels

/// Reads (row, column, value) triples out of solution rows carrying
/// "R{i}N{v}" and "C{j}N{v}" labels. Throws MalformedSolution when a row
/// lacks them, a value is out of range, or a cell is filled twice.
Grid grid_from_labeled_rows(int n, const Solution& solution);

}  // namespace xcover

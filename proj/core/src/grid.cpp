#include "xcover/grid.hpp"

#include <charconv>

#include "xcover/error.hpp"

namespace xcover {

int Grid::given_count() const {
  int count = 0;
  for (int v : cells) count += v != 0;
  return count;
}

bool Grid::complete() const {
  for (int v : cells)
    if (v == 0) return false;
  return true;
}

bool is_latin_square(const Grid& grid) {
  const int n = grid.n;
  if (n <= 0 || grid.cells.size() != static_cast<std::size_t>(n) * n) return false;
  std::vector<int> row_seen(static_cast<std::size_t>(n) * (n + 1), 0);
  std::vector<int> col_seen(static_cast<std::size_t>(n) * (n + 1), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int v = grid.at(i, j);
      if (v < 1 || v > n) return false;
      if (row_seen[static_cast<std::size_t>(i - 1) * (n + 1) + v]++) return false;
      if (col_seen[static_cast<std::size_t>(j - 1) * (n + 1) + v]++) return false;
    }
  }
  return true;
}

std::string format_grid(const Grid& grid) {
  std::string out;
  for (int i = 1; i <= grid.n; ++i) {
    for (int j = 1; j <= grid.n; ++j) {
      if (j > 1) out += ' ';
      const int v = grid.at(i, j);
      out += v == 0 ? std::string(".") : std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

namespace labels {

std::string cell(int i, int j, int n) {
  if (n <= 9) return std::to_string(i) + std::to_string(j);
  return "r" + std::to_string(i) + "c" + std::to_string(j);
}

std::string number(char prefix, int a, int v) {
  return std::string(1, prefix) + std::to_string(a) + "N" + std::to_string(v);
}

std::optional<std::pair<int, int>> parse_number(std::string_view label, char prefix) {
  if (label.size() < 4 || label.front() != prefix) return std::nullopt;
  const char* p = label.data() + 1;
  const char* end = label.data() + label.size();
  int a = 0, v = 0;
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{} || r1.ptr == p || r1.ptr == end || *r1.ptr != 'N') return std::nullopt;
  const char* q = r1.ptr + 1;
  auto r2 = std::from_chars(q, end, v);
  if (r2.ec != std::errc{} || r2.ptr == q || r2.ptr != end) return std::nullopt;
  return std::pair{a, v};
}

}  // namespace labels

Grid grid_from_labeled_rows(int n, const Solution& solution) {
  Grid grid = Grid::blank(n);
  for (const auto& row : solution.labels) {
    std::optional<std::pair<int, int>> rn, cn;
    for (const auto& label : row) {
      if (!rn) rn = labels::parse_number(label, 'R');
      if (!cn) cn = labels::parse_number(label, 'C');
    }
    if (!rn || !cn || rn->second != cn->second)
      throw Error(Errc::MalformedSolution, "row without matching R/C labels");
    const int i = rn->first, j = cn->first, v = rn->second;
    if (i < 1 || i > n || j < 1 || j > n || v < 1 || v > n)
      throw Error(Errc::MalformedSolution, "cell or symbol out of range");
    if (grid.at(i, j) != 0)
      throw Error(Errc::MalformedSolution,
                  "cell (" + std::to_string(i) + "," + std::to_string(j) + ") filled twice");
    grid.at(i, j) = v;
  }
  return grid;
}

}  // namespace xcover

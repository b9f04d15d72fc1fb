#include "xcover/queens.hpp"

#include <charconv>
#include <optional>

#include "xcover/error.hpp"

namespace xcover::queens {

Instance build_instance(int n, bool secondary_diagonals) {
  if (n < 1) throw Error(Errc::InvalidArgument, "board size must be at least 1");
  Instance instance;
  if (secondary_diagonals) {
    std::vector<std::string> diagonals;
    for (int d = 1; d <= 2 * n - 1; ++d) diagonals.push_back("A" + std::to_string(d));
    for (int d = 1; d <= 2 * n - 1; ++d) diagonals.push_back("B" + std::to_string(d));
    instance.declare_secondary(diagonals);
  }
  std::vector<std::string> row(4);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      row[0] = "R" + std::to_string(i);
      row[1] = "F" + std::to_string(j);
      row[2] = "A" + std::to_string(i + j - 1);
      row[3] = "B" + std::to_string(i - j + n);
      instance.add_row(row);
    }
  }
  return instance;
}

namespace {

std::optional<int> parse_index(std::string_view label, char prefix) {
  if (label.size() < 2 || label.front() != prefix) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), value);
  if (ec != std::errc{} || ptr != label.data() + label.size()) return std::nullopt;
  return value;
}

}  // namespace

std::string render(int n, const Solution& solution) {
  std::vector<std::string> board(static_cast<std::size_t>(n), std::string(static_cast<std::size_t>(n), '.'));
  std::vector<char> rank(static_cast<std::size_t>(n) + 1, 0), file(rank.size(), 0);
  for (const auto& labels : solution.labels) {
    std::optional<int> i, j;
    for (const auto& label : labels) {
      if (!i) i = parse_index(label, 'R');
      if (!j) j = parse_index(label, 'F');
    }
    if (!i || !j || *i < 1 || *i > n || *j < 1 || *j > n || rank[*i] || file[*j])
      throw Error(Errc::MalformedSolution, "row is not a queen on a free rank and file");
    rank[*i] = file[*j] = 1;
    board[*i - 1][*j - 1] = 'Q';
  }
  if (static_cast<int>(solution.labels.size()) != n)
    throw Error(Errc::MalformedSolution, "expected " + std::to_string(n) + " queens");
  std::string out;
  for (const auto& line : board) out += line + '\n';
  return out;
}

}  // namespace xcover::queens

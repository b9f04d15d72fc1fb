#include "xcover/sudoku.hpp"

#include <charconv>

#include "xcover/error.hpp"
#include "xcover/io.hpp"

namespace xcover::sudoku {

namespace {

void check_spec(const Spec& spec) {
  if (spec.order < 1) throw Error(Errc::InvalidArgument, "order must be at least 1");
}

bool is_rule_line(std::string_view line) {
  bool has_dash = false;
  for (char ch : line) {
    if (ch == '-' || ch == '+') has_dash = true;
    else if (ch != '|' && ch != ' ' && ch != '\t') return false;
  }
  return has_dash;
}

int parse_token(std::string_view token, int n, std::size_t line) {
  if (token == "." || token == "0") return 0;
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || v < 1 || v > n)
    throw Error(Errc::BadToken, "'" + std::string(token) + "'", line);
  return v;
}

}  // namespace

int box_index(const Spec& spec, int i, int j) {
  const int k = spec.order;
  return ((i - 1) / k) * k + (j - 1) / k + 1;
}

void check_givens(const Spec& spec, const Grid& puzzle) {
  check_spec(spec);
  const int n = spec.n();
  if (puzzle.n != n || puzzle.cells.size() != static_cast<std::size_t>(n) * n)
    throw Error(Errc::BadDimensions, "expected a " + std::to_string(n) + "x" + std::to_string(n) +
                                         " grid");
  std::vector<char> row(static_cast<std::size_t>(n) * (n + 1)), col(row.size()), box(row.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int v = puzzle.at(i, j);
      if (v == 0) continue;
      if (v < 0 || v > n) throw Error(Errc::BadToken, "symbol " + std::to_string(v));
      const auto b = box_index(spec, i, j);
      auto& r = row[static_cast<std::size_t>(i - 1) * (n + 1) + v];
      auto& c = col[static_cast<std::size_t>(j - 1) * (n + 1) + v];
      auto& x = box[static_cast<std::size_t>(b - 1) * (n + 1) + v];
      if (r || c || x)
        throw Error(Errc::InconsistentGivens, "symbol " + std::to_string(v) + " repeats at (" +
                                                  std::to_string(i) + "," + std::to_string(j) + ")");
      r = c = x = 1;
    }
  }
}

namespace {

Instance build(const Spec& spec, const Grid* puzzle) {
  const int n = spec.n();
  Instance instance;
  std::vector<std::string> row(4);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int given = puzzle ? puzzle->at(i, j) : 0;
      const int lo = given ? given : 1;
      const int hi = given ? given : n;
      for (int v = lo; v <= hi; ++v) {
        row[0] = labels::cell(i, j, n);
        row[1] = labels::number('R', i, v);
        row[2] = labels::number('C', j, v);
        row[3] = labels::number('B', box_index(spec, i, j), v);
        instance.add_row(row);
      }
    }
  }
  return instance;
}

}  // namespace

Instance build_instance(const Spec& spec) {
  check_spec(spec);
  return build(spec, nullptr);
}

Instance build_instance(const Spec& spec, const Grid& puzzle) {
  check_givens(spec, puzzle);
  return build(spec, &puzzle);
}

Grid read_puzzle(std::string_view text, const Spec& spec) {
  check_spec(spec);
  const int n = spec.n();
  struct Line {
    std::string content;
    std::size_t number;
  };
  std::vector<Line> lines;
  const auto raw = split_lines(text);
  for (std::size_t idx = 0; idx < raw.size(); ++idx) {
    std::string_view line = raw[idx];
    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#' || is_rule_line(line)) continue;
    std::string cleaned;
    for (char ch : line) cleaned.push_back(ch == '|' ? ' ' : ch);
    lines.push_back({std::move(cleaned), idx + 1});
  }

  Grid grid = Grid::blank(n);
  const auto cells = static_cast<std::size_t>(n) * n;
  if (lines.size() == 1 && n <= 9) {
    auto fields = split_fields(lines[0].content);
    if (fields.size() == 1 && fields[0].size() == cells) {
      for (std::size_t c = 0; c < cells; ++c)
        grid.cells[c] = parse_token(fields[0].substr(c, 1), n, lines[0].number);
      check_givens(spec, grid);
      return grid;
    }
  }
  if (lines.size() != static_cast<std::size_t>(n))
    throw Error(Errc::BadDimensions,
                "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size()));
  for (int i = 1; i <= n; ++i) {
    const auto& line = lines[static_cast<std::size_t>(i - 1)];
    auto fields = split_fields(line.content);
    if (fields.size() == static_cast<std::size_t>(n)) {
      for (int j = 1; j <= n; ++j) grid.at(i, j) = parse_token(fields[j - 1], n, line.number);
    } else if (n <= 9) {
      // Characters without separators, possibly split into box groups.
      std::string joined;
      for (auto f : fields) joined += f;
      if (joined.size() != static_cast<std::size_t>(n))
        throw Error(Errc::BadDimensions, "expected " + std::to_string(n) + " cells", line.number);
      for (int j = 1; j <= n; ++j)
        grid.at(i, j) = parse_token(std::string_view(joined).substr(j - 1, 1), n, line.number);
    } else {
      throw Error(Errc::BadDimensions, "expected " + std::to_string(n) + " tokens", line.number);
    }
  }
  check_givens(spec, grid);
  return grid;
}

PuzzleResult solve_puzzle(const Spec& spec, const Grid& puzzle, Mode mode, EngineKind engine) {
  const Instance instance = build_instance(spec, puzzle);
  SearchLimits limits;
  if (mode == Mode::First) limits.max_solutions = 1;
  if (mode == Mode::CheckUnique) limits.max_solutions = 2;

  PuzzleResult result;
  result.stats = solve(instance, engine, limits, [&](std::span<const RowId> rows) {
    result.grids.push_back(grid_from_labeled_rows(spec.n(), make_solution(instance, rows)));
  });
  const auto found = result.stats.solutions_found;
  result.classification =
      found == 0 ? Uniqueness::None : (found == 1 ? Uniqueness::Unique : Uniqueness::Multiple);
  return result;
}

bool grid_is_valid(const Spec& spec, const Grid& grid) {
  check_spec(spec);
  const int n = spec.n();
  if (grid.n != n || grid.cells.size() != static_cast<std::size_t>(n) * n) return false;
  if (!grid.complete()) throw Error(Errc::IncompleteGrid, "grid has blank cells");
  if (!is_latin_square(grid)) return false;
  std::vector<char> seen(static_cast<std::size_t>(n) * (n + 1), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      auto& s = seen[static_cast<std::size_t>(box_index(spec, i, j) - 1) * (n + 1) + grid.at(i, j)];
      if (s) return false;
      s = 1;
    }
  }
  return true;
}

std::string format_boxed(const Spec& spec, const Grid& grid) {
  const int k = spec.order, n = spec.n();
  const int width = n > 9 ? 2 : 1;
  std::string rule;
  for (int b = 0; b < k; ++b) {
    rule += '+';
    rule += std::string(static_cast<std::size_t>(k * (width + 1) + 1), '-');
  }
  rule += "+\n";
  std::string out = rule;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if ((j - 1) % k == 0) out += "| ";
      const int v = grid.at(i, j);
      std::string cell = v == 0 ? "." : std::to_string(v);
      out += std::string(static_cast<std::size_t>(width) - cell.size(), ' ') + cell + ' ';
    }
    out += "|\n";
    if (i % k == 0) out += rule;
  }
  return out;
}

}  // namespace xcover::sudoku

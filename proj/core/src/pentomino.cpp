#include "xcover/pentomino.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "xcover/error.hpp"
#include "xcover/io.hpp"

namespace xcover::pentomino {

Shape normalize(std::vector<Cell> cells) {
  int min_row = cells.front().row, min_col = cells.front().col;
  for (auto c : cells) {
    min_row = std::min(min_row, c.row);
    min_col = std::min(min_col, c.col);
  }
  for (auto& c : cells) {
    c.row -= min_row;
    c.col -= min_col;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

const std::array<Piece, 12>& pieces() {
  // Golomb's letters:
  //  F .##   I #   L #    P ##   N .#   T ###
  //    ##.     #     #      ##     .#     .#.
  //    .#.     #     #      #.     ##     .#.
  //            #     ##            #.
  //            #
  //  U #.#   V #..   W #..  X .#.  Y .#   Z ##.
  //    ###     #..     ##.    ###    ##     .#.
  //            ###     .##    .#.    .#     .##
  //                                  .#
  static const std::array<Piece, 12> table{{
      {'F', {{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 1}}}},
      {'I', {{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}}}},
      {'L', {{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1}}}},
      {'P', {{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}}}},
      {'N', {{{0, 1}, {1, 1}, {2, 0}, {2, 1}, {3, 0}}}},
      {'T', {{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 1}}}},
      {'U', {{{0, 0}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}}},
      {'V', {{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}}}},
      {'W', {{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}}}},
      {'X', {{{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}}}},
      {'Y', {{{0, 1}, {1, 0}, {1, 1}, {2, 1}, {3, 1}}}},
      {'Z', {{{0, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}}}},
  }};
  return table;
}

const Piece& piece(char name) {
  for (const auto& p : pieces())
    if (p.name == name) return p;
  throw Error(Errc::InvalidArgument, std::string("unknown piece '") + name + "'");
}

std::vector<Shape> orientations(char name, bool one_sided) {
  const Piece& p = piece(name);
  std::set<Shape> distinct;
  std::vector<Cell> cells(p.cells.begin(), p.cells.end());
  for (int flip = 0; flip < (one_sided ? 1 : 2); ++flip) {
    std::vector<Cell> current = cells;
    if (flip)
      for (auto& c : current) c.col = -c.col;
    for (int turn = 0; turn < 4; ++turn) {
      distinct.insert(normalize(current));
      for (auto& c : current) c = Cell{c.col, -c.row};
    }
  }
  return {distinct.begin(), distinct.end()};
}

Board::Board(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  if (cells_.empty()) return;
  int max_row = cells_.front().row, max_col = cells_.front().col;
  min_row_ = cells_.front().row;
  min_col_ = cells_.front().col;
  for (auto c : cells_) {
    min_row_ = std::min(min_row_, c.row);
    min_col_ = std::min(min_col_, c.col);
    max_row = std::max(max_row, c.row);
    max_col = std::max(max_col, c.col);
  }
  height_ = max_row - min_row_ + 1;
  width_ = max_col - min_col_ + 1;
  numbers_.assign(static_cast<std::size_t>(height_) * width_, 0);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const auto& c = cells_[i];
    numbers_[static_cast<std::size_t>(c.row - min_row_) * width_ + (c.col - min_col_)] =
        static_cast<int>(i + 1);
  }
}

int Board::number(Cell cell) const {
  const int r = cell.row - min_row_, c = cell.col - min_col_;
  if (r < 0 || c < 0 || r >= height_ || c >= width_) return 0;
  return numbers_[static_cast<std::size_t>(r) * width_ + c];
}

bool Board::contains(Cell cell) const { return number(cell) != 0; }

namespace {

Board rectangle(int rows, int cols) {
  std::vector<Cell> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) cells.push_back({r, c});
  return Board(std::move(cells));
}

constexpr std::string_view kCrossMask =
    "...###...\n"
    "...###...\n"
    "...###...\n"
    "#########\n"
    "#########\n"
    "#########\n"
    "...###...\n"
    "...###...\n"
    "...###...\n"
    "...###...\n"
    "...###...\n"
    "...###...\n"
    "...###...\n"
    "...###...\n";

}  // namespace

Board builtin_board(BuiltinBoard which) {
  switch (which) {
    case BuiltinBoard::R3x20: return rectangle(3, 20);
    case BuiltinBoard::R4x15: return rectangle(4, 15);
    case BuiltinBoard::R5x12: return rectangle(5, 12);
    case BuiltinBoard::R6x10: return rectangle(6, 10);
    case BuiltinBoard::Chess: {
      std::vector<Cell> cells;
      for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
          if (!((r == 3 || r == 4) && (c == 3 || c == 4))) cells.push_back({r, c});
      return Board(std::move(cells));
    }
    case BuiltinBoard::Cross: return read_board(kCrossMask);
  }
  throw Error(Errc::InvalidArgument, "unknown board");
}

std::optional<BuiltinBoard> parse_board_name(std::string_view name) {
  if (name.size() > 1 && name.front() == 'r' && name[1] >= '0' && name[1] <= '9') name.remove_prefix(1);
  if (name == "3x20") return BuiltinBoard::R3x20;
  if (name == "4x15") return BuiltinBoard::R4x15;
  if (name == "5x12") return BuiltinBoard::R5x12;
  if (name == "6x10") return BuiltinBoard::R6x10;
  if (name == "chess") return BuiltinBoard::Chess;
  if (name == "cross") return BuiltinBoard::Cross;
  return std::nullopt;
}

std::string_view board_name(BuiltinBoard which) {
  switch (which) {
    case BuiltinBoard::R3x20: return "3x20";
    case BuiltinBoard::R4x15: return "4x15";
    case BuiltinBoard::R5x12: return "5x12";
    case BuiltinBoard::R6x10: return "6x10";
    case BuiltinBoard::Chess: return "chess";
    case BuiltinBoard::Cross: return "cross";
  }
  return "?";
}

Board read_board(std::string_view text) {
  std::vector<Cell> cells;
  const auto lines = split_lines(text);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    for (std::size_t c = 0; c < lines[r].size(); ++c) {
      const char ch = lines[r][c];
      if (ch == '#') {
        cells.push_back({static_cast<int>(r), static_cast<int>(c)});
      } else if (ch != '.') {
        throw Error(Errc::BadCharacter,
                    "column " + std::to_string(c + 1) + ": expected '#' or '.'", r + 1);
      }
    }
  }
  if (cells.empty()) throw Error(Errc::EmptyBoard, "board has no cells");
  return Board(std::move(cells));
}

std::string format_board(const Board& board) {
  std::string out;
  for (int r = 0; r < board.height(); ++r) {
    for (int c = 0; c < board.width(); ++c)
      out += board.contains({board.min_row() + r, board.min_col() + c}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

PentominoInstance build_instance(const Board& board, bool one_sided, std::string_view piece_set) {
  if (board.size() == 0) throw Error(Errc::EmptyBoard, "board has no cells");
  PentominoInstance out;
  std::vector<std::string> columns;
  for (char name : kPieceNames)
    if (piece_set.find(name) != std::string_view::npos) columns.emplace_back(1, name);
  for (std::size_t i = 1; i <= board.size(); ++i) columns.push_back(std::to_string(i));
  out.instance.declare_primary(columns);

  std::vector<std::string> row(6);
  for (char name : kPieceNames) {
    if (piece_set.find(name) == std::string_view::npos) continue;
    for (const Shape& shape : orientations(name, one_sided)) {
      for (int dr = board.min_row(); dr < board.min_row() + board.height(); ++dr) {
        for (int dc = board.min_col(); dc < board.min_col() + board.width(); ++dc) {
          Placement placement{name, {}};
          bool fits = true;
          for (std::size_t k = 0; k < 5 && fits; ++k) {
            const Cell cell{shape[k].row + dr, shape[k].col + dc};
            fits = board.contains(cell);
            placement.cells[k] = cell;
          }
          if (!fits) continue;
          row[0] = std::string(1, name);
          for (std::size_t k = 0; k < 5; ++k)
            row[k + 1] = std::to_string(board.number(placement.cells[k]));
          out.instance.add_row(row);
          out.placements.push_back(placement);
        }
      }
    }
  }
  return out;
}

Tiling tiling_from_rows(const PentominoInstance& table, std::span<const RowId> rows) {
  Tiling tiling;
  for (RowId id : rows) {
    if (!table.instance.contains(id)) throw Error(Errc::UnknownRowId, std::to_string(id.value));
    tiling.push_back(table.placements[id.value - 1]);
  }
  return tiling;
}

std::string render(const Board& board, const Tiling& tiling) {
  std::string grid;
  const int h = board.height(), w = board.width();
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c)
      grid += board.contains({board.min_row() + r, board.min_col() + c}) ? '?' : '.';
    grid += '\n';
  }
  for (const auto& p : tiling) {
    for (auto cell : p.cells) {
      if (!board.contains(cell)) throw Error(Errc::MalformedSolution, "placement leaves the board");
      grid[static_cast<std::size_t>(cell.row - board.min_row()) * (w + 1) +
           (cell.col - board.min_col())] = p.piece;
    }
  }
  if (grid.find('?') != std::string::npos)
    throw Error(Errc::IncompleteSolution, "board cell left uncovered");
  return grid;
}

std::string render_solution(const Board& board, const PentominoInstance& table,
                            std::span<const RowId> rows) {
  return render(board, tiling_from_rows(table, rows));
}

std::string format_placements(const PentominoInstance& table) {
  std::string out;
  for (std::size_t i = 0; i < table.placements.size(); ++i) {
    const auto& p = table.placements[i];
    out += std::to_string(i + 1) + " " + p.piece;
    for (auto c : p.cells) out += " " + std::to_string(c.row) + "," + std::to_string(c.col);
    out += '\n';
  }
  return out;
}

Cell apply(Transform t, const Board& board, Cell cell) {
  const int h = board.height(), w = board.width();
  const int r = cell.row - board.min_row(), c = cell.col - board.min_col();
  int nr = r, nc = c;
  switch (t.id) {
    case 0: nr = r; nc = c; break;
    case 1: nr = c; nc = h - 1 - r; break;          // quarter turn clockwise
    case 2: nr = h - 1 - r; nc = w - 1 - c; break;  // half turn
    case 3: nr = w - 1 - c; nc = r; break;          // quarter turn counterclockwise
    case 4: nr = r; nc = w - 1 - c; break;          // mirror left-right
    case 5: nr = h - 1 - r; nc = c; break;          // mirror top-bottom
    case 6: nr = c; nc = r; break;                  // main diagonal
    case 7: nr = w - 1 - c; nc = h - 1 - r; break;  // anti-diagonal
    default: throw Error(Errc::InvalidArgument, "transform id out of range");
  }
  return {nr + board.min_row(), nc + board.min_col()};
}

std::vector<Transform> symmetry_group(const Board& board) {
  std::vector<Transform> group;
  for (int id = 0; id < 8; ++id) {
    const Transform t{id};
    bool maps = std::all_of(board.cells().begin(), board.cells().end(),
                            [&](Cell c) { return board.contains(apply(t, board, c)); });
    if (maps) group.push_back(t);
  }
  return group;
}

namespace {

// Piece letters over the board cells in numbering order.
std::string letter_key(const Board& board, const Tiling& tiling) {
  std::string key(board.size(), '?');
  for (const auto& p : tiling)
    for (auto c : p.cells) {
      const int num = board.number(c);
      if (num == 0) throw Error(Errc::TransformEscape, "placement leaves the board");
      key[static_cast<std::size_t>(num - 1)] = p.piece;
    }
  return key;
}

Tiling transform_tiling(Transform t, const Board& board, const Tiling& tiling) {
  Tiling out;
  out.reserve(tiling.size());
  for (const auto& p : tiling) {
    Placement q{p.piece, {}};
    for (std::size_t k = 0; k < 5; ++k) {
      q.cells[k] = apply(t, board, p.cells[k]);
      if (!board.contains(q.cells[k]))
        throw Error(Errc::TransformEscape, "transform maps a cell off the board");
    }
    std::sort(q.cells.begin(), q.cells.end());
    out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Orbit> dedupe_unique(const Board& board, const std::vector<Tiling>& tilings) {
  const auto group = symmetry_group(board);
  std::map<std::string, Orbit> orbits;
  for (const auto& tiling : tilings) {
    std::set<std::string> images;
    std::string best_key;
    Tiling best;
    for (Transform t : group) {
      Tiling image = transform_tiling(t, board, tiling);
      std::string key = letter_key(board, image);
      if (best_key.empty() || key < best_key) {
        best_key = key;
        best = std::move(image);
      }
      images.insert(std::move(key));
    }
    auto [it, inserted] = orbits.try_emplace(best_key);
    if (inserted) {
      std::sort(best.begin(), best.end());
      it->second = Orbit{std::move(best), images.size()};
    }
  }
  std::vector<Orbit> out;
  out.reserve(orbits.size());
  for (auto& [key, orbit] : orbits) out.push_back(std::move(orbit));
  return out;
}

}  // namespace xcover::pentomino

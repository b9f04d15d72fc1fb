#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xcover/instance.hpp"

namespace xcover::pentomino {

struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Sorted cells translated so that min row = min col = 0.
using Shape = std::vector<Cell>;

Shape normalize(std::vector<Cell> cells);

/// Piece letters in column order.
inline constexpr std::string_view kPieceNames = "FILPNTUVWXYZ";

struct Piece {
  char name;
  std::array<Cell, 5> cells;
};

const std::array<Piece, 12>& pieces();

/// Throws InvalidArgument for a letter outside kPieceNames.
const Piece& piece(char name);

/// Distinct orientations under rotation, plus reflection unless
/// `one_sided`; normalized and sorted.
std::vector<Shape> orientations(char piece, bool one_sided = false);

/// A set of board cells. Cells are numbered 1..size() in row-major order.
class Board {
 public:
  Board() = default;
  explicit Board(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool contains(Cell cell) const;
  /// 1-based row-major number of `cell`, 0 when not on the board.
  int number(Cell cell) const;

  int min_row() const noexcept { return min_row_; }
  int min_col() const noexcept { return min_col_; }
  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }

  friend bool operator==(const Board& a, const Board& b) { return a.cells_ == b.cells_; }

 private:
  std::vector<Cell> cells_;  // sorted row-major
  std::vector<int> numbers_;  // bounding-box lookup, 0 for holes
  int min_row_ = 0, min_col_ = 0, height_ = 0, width_ = 0;
};

enum class BuiltinBoard { R3x20, R4x15, R5x12, R6x10, Chess, Cross };

/// Rectangles; the 8x8 board without its central 2x2; and the 60-cell
/// cross: a 3-wide bar 14 rows tall crossed by a 9-wide bar on rows 4-6.
Board builtin_board(BuiltinBoard which);
std::optional<BuiltinBoard> parse_board_name(std::string_view name);
std::string_view board_name(BuiltinBoard which);

/// '#' marks a board cell and '.' a hole. Throws BadCharacter (with line)
/// for anything else and EmptyBoard when there is no '#'.
Board read_board(std::string_view text);
std::string format_board(const Board& board);

struct Placement {
  char piece = 0;
  std::array<Cell, 5> cells{};  // sorted

  friend auto operator<=>(const Placement&, const Placement&) = default;
};

/// A tiling: one placement per piece.
using Tiling = std::vector<Placement>;

struct PentominoInstance {
  Instance instance;
  std::vector<Placement> placements;  // placements[r - 1] belongs to RowId r
};

/// Columns: the piece letters, then the cell numbers "1".."N", all primary
/// and declared up front. Rows: every placement of every orientation of
/// every piece, ordered by piece, orientation, then anchor row-major. Each
/// row is the piece letter followed by its five cell numbers.
PentominoInstance build_instance(const Board& board, bool one_sided = false,
                                 std::string_view piece_set = kPieceNames);

Tiling tiling_from_rows(const PentominoInstance& table, std::span<const RowId> rows);

/// Letter grid over the board's bounding box, '.' at holes. Throws
/// IncompleteSolution if a board cell is left uncovered.
std::string render(const Board& board, const Tiling& tiling);
std::string render_solution(const Board& board, const PentominoInstance& table,
                            std::span<const RowId> rows);

/// "rowid piece r1,c1 r2,c2 ..." per placement.
std::string format_placements(const PentominoInstance& table);

/// One of the 8 square-lattice isometries, applied within the board's
/// bounding box: rotations by 0/90/180/270 degrees (0-3) and the four
/// reflections (4-7).
struct Transform {
  int id = 0;
  friend auto operator<=>(const Transform&, const Transform&) = default;
};

Cell apply(Transform t, const Board& board, Cell cell);

/// Isometries that map the board's cell set onto itself.
std::vector<Transform> symmetry_group(const Board& board);

struct Orbit {
  Tiling representative;  // least image by letter grid, placements sorted
  std::size_t size = 0;   // distinct tilings in the orbit
};

/// Groups tilings into orbits under symmetry_group(board). Orbits are
/// returned in order of their canonical letter grids.
std::vector<Orbit> dedupe_unique(const Board& board, const std::vector<Tiling>& tilings);

}  // namespace xcover::pentomino

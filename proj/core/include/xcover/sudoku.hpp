#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "xcover/grid.hpp"
#include "xcover/instance.hpp"
#include "xcover/solve.hpp"

namespace xcover::sudoku {

struct Spec {
  int order = 3;  // k; the grid is n x n with n = k^2
  int n() const noexcept { return order * order; }
};

/// 1-based box of cell (i, j); boxes are numbered row-major.
int box_index(const Spec& spec, int i, int j);

/// Throws InconsistentGivens when a symbol repeats in a row, column or box,
/// BadDimensions when the grid size does not match the spec.
void check_givens(const Spec& spec, const Grid& puzzle);

/// 4n^2 primary columns: cell "ij", "R{i}N{v}", "C{j}N{v}", "B{b}N{v}".
/// Without a puzzle every cell gets all n candidates; with one, each given
/// cell gets only its own value.
Instance build_instance(const Spec& spec);
Instance build_instance(const Spec& spec, const Grid& puzzle);

/// Accepts n lines of n whitespace-separated tokens, or (n <= 9) lines of n
/// characters, or a single line of n^2 characters. Blanks are '.' or '0'.
/// '|' characters and rule lines made of '-', '+' and '|' are ignored, as
/// are blank lines and lines starting with '#'.
Grid read_puzzle(std::string_view text, const Spec& spec);

enum class Mode { First, CheckUnique, All };
enum class Uniqueness { None, Unique, Multiple };

struct PuzzleResult {
  std::vector<Grid> grids;
  SearchStats stats;
  /// By solutions found: 0, 1, 2 or more. Under Mode::First at most one
  /// solution is sought, so Unique there means "solvable".
  Uniqueness classification = Uniqueness::None;
};

PuzzleResult solve_puzzle(const Spec& spec, const Grid& puzzle, Mode mode,
                          EngineKind engine = EngineKind::Dlx);

/// Throws IncompleteGrid when a cell is blank.
bool grid_is_valid(const Spec& spec, const Grid& grid);

/// Grid with box rules, in the style of printed puzzles.
std::string format_boxed(const Spec& spec, const Grid& grid);

}  // namespace xcover::sudoku

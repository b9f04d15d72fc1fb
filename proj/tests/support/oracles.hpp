#pragma once

// Reference computations that share no code with the solver. Each one
// attacks its problem directly (permutations, cell-by-cell backtracking,
// bounding-box arithmetic) so it can cross-check the exact-cover route.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "xcover/grid.hpp"
#include "xcover/instance.hpp"

namespace xcover::oracle {

/// N-queens count over all n! rank-to-file permutations.
inline std::uint64_t queens_by_permutation(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if (std::abs(perm[a] - perm[b]) == b - a) ok = false;
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Plain Sudoku backtracking: fill the first blank cell with each legal
/// symbol in turn. Stops after `cap` completions.
inline void sudoku_backtrack(Grid& g, int k, std::size_t cap, std::vector<Grid>& out) {
  if (out.size() >= cap) return;
  const int n = k * k;
  int cell = -1;
  for (int c = 0; c < n * n; ++c)
    if (g.cells[c] == 0) {
      cell = c;
      break;
    }
  if (cell < 0) {
    out.push_back(g);
    return;
  }
  const int r = cell / n, c = cell % n;
  for (int v = 1; v <= n; ++v) {
    bool legal = true;
    for (int t = 0; t < n && legal; ++t) {
      if (g.cells[r * n + t] == v || g.cells[t * n + c] == v) legal = false;
      const int br = (r / k) * k + t / k, bc = (c / k) * k + t % k;
      if (g.cells[br * n + bc] == v) legal = false;
    }
    if (!legal) continue;
    g.cells[cell] = v;
    sudoku_backtrack(g, k, cap, out);
    g.cells[cell] = 0;
    if (out.size() >= cap) return;
  }
}

inline std::vector<Grid> sudoku_solutions(Grid g, int k, std::size_t cap) {
  std::vector<Grid> out;
  sudoku_backtrack(g, k, cap, out);
  return out;
}

/// Counts Latin squares of order n by filling cells row-major.
inline std::uint64_t latin_by_backtracking(int n, bool normalized) {
  std::vector<int> g(static_cast<std::size_t>(n * n), 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == n * n) {
      ++count;
      return;
    }
    const int r = cell / n, c = cell % n;
    for (int v = 1; v <= n; ++v) {
      if (normalized && r == 0 && v != c + 1) continue;
      if (normalized && c == 0 && v != r + 1) continue;
      bool ok = true;
      for (int t = 0; t < n && ok; ++t)
        if ((t < c && g[r * n + t] == v) || (t < r && g[t * n + c] == v)) ok = false;
      if (!ok) continue;
      g[cell] = v;
      self(self, cell + 1);
      g[cell] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

/// Placements of a w x h bounding box in a W x H rectangle, summed over
/// the orientation boxes of the 12 free pentominoes, written out by hand:
///   F L N P Y: 8 orientations each, 4 of them 3x2/4x2 upright, 4 lying
///   I: 1x5 and 5x1; T U V W Z: 4 each; X: 1.
inline std::uint64_t rectangle_placements(int W, int H) {
  struct Box {
    int w, h, times;
  };
  const std::vector<Box> boxes = {
      {3, 3, 8},             // F
      {1, 5, 1}, {5, 1, 1},  // I
      {2, 4, 4}, {4, 2, 4},  // L
      {2, 4, 4}, {4, 2, 4},  // N
      {2, 3, 4}, {3, 2, 4},  // P
      {3, 3, 4},             // T
      {3, 2, 2}, {2, 3, 2},  // U
      {3, 3, 4},             // V
      {3, 3, 4},             // W
      {3, 3, 1},             // X
      {2, 4, 4}, {4, 2, 4},  // Y
      {3, 3, 4},             // Z
  };
  std::uint64_t total = 0;
  for (const auto& b : boxes)
    if (b.w <= W && b.h <= H) total += static_cast<std::uint64_t>(b.times) * (W - b.w + 1) * (H - b.h + 1);
  return total;
}

struct RandomInstanceSpec {
  int max_columns = 12;
  int max_rows = 20;
};

/// Random instance: 1..max_columns columns of which a random subset is
/// secondary, rows at 20-50% density. Every row carries at least one
/// primary column (rows made only of secondary columns are never selected
/// by Algorithm X).
inline Instance random_instance(std::mt19937_64& rng, const RandomInstanceSpec& spec = {}) {
  std::uniform_int_distribution<int> col_dist(1, spec.max_columns);
  std::uniform_int_distribution<int> row_dist(0, spec.max_rows);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int columns = col_dist(rng);
  const int rows = row_dist(rng);
  const double density = 0.2 + 0.3 * unit(rng);

  std::vector<bool> secondary(static_cast<std::size_t>(columns));
  int primaries = 0;
  for (int c = 0; c < columns; ++c) {
    secondary[c] = unit(rng) < 0.3;
    primaries += !secondary[c];
  }
  if (primaries == 0) secondary[0] = false;

  Instance inst;
  std::vector<std::string> names;
  for (int c = 0; c < columns; ++c) names.push_back("c" + std::to_string(c));
  std::vector<std::string> declared;
  for (int c = 0; c < columns; ++c)
    if (secondary[c]) declared.push_back(names[c]);
  inst.declare_secondary(declared);

  std::vector<int> prim;
  for (int c = 0; c < columns; ++c)
    if (!secondary[c]) prim.push_back(c);
  std::uniform_int_distribution<std::size_t> pick(0, prim.size() - 1);
  for (int r = 0; r < rows; ++r) {
    std::vector<bool> in(static_cast<std::size_t>(columns), false);
    for (int c = 0; c < columns; ++c) in[c] = unit(rng) < density;
    in[prim[pick(rng)]] = true;
    std::vector<std::string> labels;
    for (int c = 0; c < columns; ++c)
      if (in[c]) labels.push_back(names[c]);
    std::shuffle(labels.begin(), labels.end(), rng);
    inst.add_row(labels);
  }
  return inst;
}

}  // namespace xcover::oracle

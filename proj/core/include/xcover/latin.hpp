#pragma once

#include <string>

#include "xcover/grid.hpp"
#include "xcover/instance.hpp"

namespace xcover::latin {

__extension__ typedef unsigned __int128 Count;

struct Spec {
  int n = 1;
  bool normalized = false;  // first row and first column in natural order
};

/// 3n^2 primary columns: cell "ij", row-number "R{i}N{v}" and
/// column-number "C{j}N{v}". One row per candidate (i, j, v), cells in
/// row-major order and candidates ascending. When normalized, the cells of
/// the first row and first column carry only their forced candidate.
Instance build_instance(const Spec& spec);

/// Throws MalformedSolution unless the rows describe a full Latin square.
Grid solution_to_grid(const Spec& spec, const Solution& solution);

/// n! (n-1)! * normalized_count. Throws Overflow past 128 bits.
Count total_from_normalized(int n, Count normalized_count);

std::string to_string(Count value);

}  // namespace xcover::latin

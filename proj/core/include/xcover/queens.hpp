#pragma once

#include <string>

#include "xcover/instance.hpp"

namespace xcover::queens {

/// Ranks "R1..Rn" and files "F1..Fn" are primary; anti-diagonals
/// "A1..A(2n-1)" (index i+j-1) and diagonals "B1..B(2n-1)" (index i-j+n)
/// are secondary unless `secondary_diagonals` is false. One row per square,
/// row-major.
Instance build_instance(int n, bool secondary_diagonals = true);

/// n lines with 'Q' on occupied squares. Throws MalformedSolution unless
/// the rows place exactly one queen per rank and file.
std::string render(int n, const Solution& solution);

}  // namespace xcover::queens

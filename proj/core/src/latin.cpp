#include "xcover/latin.hpp"

#include <algorithm>

#include "xcover/error.hpp"

namespace xcover::latin {

Instance build_instance(const Spec& spec) {
  const int n = spec.n;
  if (n < 1) throw Error(Errc::InvalidArgument, "order must be at least 1");
  Instance instance;
  std::vector<std::string> row(3);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int lo = 1, hi = n;
      if (spec.normalized && (i == 1 || j == 1)) lo = hi = (i == 1 ? j : i);
      for (int v = lo; v <= hi; ++v) {
        row[0] = labels::cell(i, j, n);
        row[1] = labels::number('R', i, v);
        row[2] = labels::number('C', j, v);
        instance.add_row(row);
      }
    }
  }
  return instance;
}

Grid solution_to_grid(const Spec& spec, const Solution& solution) {
  Grid grid = grid_from_labeled_rows(spec.n, solution);
  if (!is_latin_square(grid)) throw Error(Errc::MalformedSolution, "not a Latin square");
  if (spec.normalized) {
    for (int k = 1; k <= spec.n; ++k)
      if (grid.at(1, k) != k || grid.at(k, 1) != k)
        throw Error(Errc::MalformedSolution, "square is not normalized");
  }
  return grid;
}

Count total_from_normalized(int n, Count normalized_count) {
  if (n < 1) throw Error(Errc::InvalidArgument, "order must be at least 1");
  Count result = normalized_count;
  auto multiply = [&](Count factor) {
    if (__builtin_mul_overflow(result, factor, &result))
      throw Error(Errc::Overflow, "count exceeds 128 bits for n = " + std::to_string(n));
  };
  for (int k = 2; k <= n; ++k) multiply(static_cast<Count>(k));
  for (int k = 2; k <= n - 1; ++k) multiply(static_cast<Count>(k));
  return result;
}

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace xcover::latin

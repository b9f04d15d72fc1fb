#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xcover/instance.hpp"
#include "xcover/solve.hpp"

namespace xcover {

/// Algorithm X over a node list, row by row: select a row, remove its nodes,
/// then remove every live row that meets one of its columns; recurse; restore.
/// Removed rows go to an undo log that is replayed in reverse on backtrack.
/// One update = one node removed.
class NaiveEngine {
 public:
  explicit NaiveEngine(const Instance& instance);

  SearchStats run(const SearchLimits& limits, ColumnPolicy policy, const SolutionSink& emit);

  /// Column ordinal to branch on in the current state, or nullopt when every
  /// primary column is covered.
  std::optional<std::uint32_t> choose_column(ColumnPolicy policy) const;

  /// Live rows per column in the current state.
  std::uint32_t live_rows(std::uint32_t column) const { return live_count_[column]; }

  /// Byte image of the mutable search state.
  std::string serialize_state() const;

 private:
  std::uint64_t remove_row(std::uint32_t row);
  std::uint64_t select_row(std::uint32_t row);
  void deselect_row(std::uint32_t row, std::size_t log_mark);

  const Instance& instance_;
  std::vector<std::uint32_t> primaries_;
  std::vector<std::uint32_t> column_offsets_;
  std::vector<std::uint32_t> column_rows_;  // 0-based row indices, ascending per column
  std::vector<std::uint8_t> row_live_;
  std::vector<std::uint32_t> live_count_;
  std::vector<std::uint8_t> covered_;
  std::size_t uncovered_primaries_ = 0;
  std::vector<std::uint32_t> removed_;
};

}  // namespace xcover

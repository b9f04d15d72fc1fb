#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xcover/instance.hpp"
#include "xcover/solve.hpp"

namespace xcover {

/// Dancing-links storage for one search: four-way linked nodes in a dense
/// arena. Index 0 is the root, 1..C are column headers (header of ordinal c
/// is c + 1), followed by one node per incidence in row order.
///
/// Only primary headers are linked into the root ring; secondary headers
/// keep their vertical lists but are never offered for branching.
class DlxArena {
 public:
  explicit DlxArena(const Instance& instance);

  /// Unlinks the column header from the ring and every row of the column
  /// from its other columns. Returns the number of node unlinks.
  /// Columns must be uncovered in exact reverse order of covering.
  std::uint64_t cover(std::uint32_t column);
  void uncover(std::uint32_t column);

  std::uint32_t size(std::uint32_t column) const { return size_[column + 1]; }
  std::size_t covered_depth() const noexcept { return cover_stack_.size(); }

  /// Uncovered primary columns in ring order.
  std::vector<std::uint32_t> ring() const;

  std::optional<std::uint32_t> choose_column(ColumnPolicy policy) const;

  /// Empty when all circular lists are consistent and every header size
  /// matches its vertical list; otherwise a description of the first fault.
  std::string check_links() const;

  /// Nodes reachable through the column lists (headers excluded).
  std::size_t live_nodes() const;

  std::string serialize() const;

 private:
  friend class DlxEngine;

  std::uint64_t cover_header(std::uint32_t header);
  void uncover_header(std::uint32_t header);
  std::optional<std::uint32_t> choose_header(ColumnPolicy policy) const;

  std::vector<std::uint32_t> left_, right_, up_, down_, column_;
  std::vector<std::uint32_t> row_;   // RowId value for nodes, 0 for headers
  std::vector<std::uint32_t> size_;  // indexed by header
  std::uint32_t header_count_ = 0;   // columns + 1
  std::vector<std::uint32_t> cover_stack_;
};

class DlxEngine {
 public:
  explicit DlxEngine(const Instance& instance) : arena_(instance) {}

  /// One update = one node unlinked from a column list.
  SearchStats run(const SearchLimits& limits, ColumnPolicy policy, const SolutionSink& emit);

  const DlxArena& arena() const noexcept { return arena_; }
  DlxArena& arena() noexcept { return arena_; }

 private:
  DlxArena arena_;
};

}  // namespace xcover

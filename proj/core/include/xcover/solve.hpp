#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "xcover/instance.hpp"

namespace xcover {

enum class EngineKind { Naive, Dlx };

std::string_view engine_name(EngineKind engine) noexcept;
std::optional<EngineKind> parse_engine(std::string_view name) noexcept;

/// How the next column to branch on is picked. Both policies only ever pick
/// uncovered primary columns and break ties by smallest ordinal.
enum class ColumnPolicy {
  MinRemaining,    // fewest live rows
  FirstUncovered,  // smallest ordinal
};

struct SearchLimits {
  std::optional<std::uint64_t> max_solutions;
  std::optional<std::uint64_t> max_updates;
  std::optional<std::chrono::nanoseconds> time_budget;
};

enum class HaltReason { Exhausted, SolutionLimit, UpdateLimit, TimeLimit };

std::string_view halt_reason_name(HaltReason reason) noexcept;

struct SearchStats {
  /// Index = search level; entry k exists once a row has been selected at k.
  std::vector<std::uint64_t> updates_per_level;
  std::uint64_t total_updates = 0;
  std::uint64_t solutions_found = 0;
  std::uint64_t nodes = 0;       // search-procedure invocations
  std::uint32_t max_depth = 0;   // deepest level entered
  std::chrono::nanoseconds wall_time{0};
  HaltReason halted_by = HaltReason::Exhausted;

  double updates_per_second() const noexcept;
};

/// Called once per exact cover, with the selected rows in level order. The
/// span is only valid for the duration of the call.
using SolutionSink = std::function<void(std::span<const RowId>)>;

struct SolveOptions {
  EngineKind engine = EngineKind::Dlx;
  SearchLimits limits;
  ColumnPolicy policy = ColumnPolicy::MinRemaining;
};

/// Enumerates exact covers of `instance`. A cover selects rows that are
/// pairwise disjoint on every column and together cover every primary column.
/// Rows made only of secondary columns are never selected.
///
/// Solutions arrive in canonical order: at each level the uncovered primary
/// column with the fewest live rows is chosen (ties: smallest ordinal), and
/// its rows are tried in ascending RowId. Both engines produce the same
/// stream.
SearchStats solve(const Instance& instance, const SolveOptions& options, const SolutionSink& emit);

SearchStats solve(const Instance& instance, EngineKind engine, const SearchLimits& limits,
                  const SolutionSink& emit);

std::uint64_t count_solutions(const Instance& instance, EngineKind engine = EngineKind::Dlx);

/// All solutions materialized; convenient for tests and small instances.
std::vector<std::vector<RowId>> all_solutions(const Instance& instance,
                                              EngineKind engine = EngineKind::Dlx,
                                              ColumnPolicy policy = ColumnPolicy::MinRemaining);

/// Throws UnknownRowId for ids outside 1..row_count().
bool check_solution(const Instance& instance, std::span<const RowId> rows);

/// Exhaustive subset enumeration; a reference oracle for the engines.
/// Throws TooLarge when the instance has more than 24 rows.
std::set<std::set<RowId>> brute_force_solutions(const Instance& instance);

}  // namespace xcover

#include "xcover/solve.hpp"

#include <algorithm>

#include "xcover/dlx.hpp"
#include "xcover/error.hpp"
#include "xcover/naive_engine.hpp"

namespace xcover {

std::string_view engine_name(EngineKind engine) noexcept {
  return engine == EngineKind::Naive ? "naive" : "dlx";
}

std::optional<EngineKind> parse_engine(std::string_view name) noexcept {
  if (name == "naive") return EngineKind::Naive;
  if (name == "dlx") return EngineKind::Dlx;
  return std::nullopt;
}

std::string_view halt_reason_name(HaltReason reason) noexcept {
  switch (reason) {
    case HaltReason::Exhausted: return "exhausted";
    case HaltReason::SolutionLimit: return "solution_limit";
    case HaltReason::UpdateLimit: return "update_limit";
    case HaltReason::TimeLimit: return "time_limit";
  }
  return "unknown";
}

double SearchStats::updates_per_second() const noexcept {
  const double seconds = std::chrono::duration<double>(wall_time).count();
  return seconds > 0 ? static_cast<double>(total_updates) / seconds : 0.0;
}

SearchStats solve(const Instance& instance, const SolveOptions& options, const SolutionSink& emit) {
  if (options.engine == EngineKind::Naive) {
    NaiveEngine engine(instance);
    return engine.run(options.limits, options.policy, emit);
  }
  DlxEngine engine(instance);
  return engine.run(options.limits, options.policy, emit);
}

SearchStats solve(const Instance& instance, EngineKind engine, const SearchLimits& limits,
                  const SolutionSink& emit) {
  return solve(instance, SolveOptions{engine, limits, ColumnPolicy::MinRemaining}, emit);
}

std::uint64_t count_solutions(const Instance& instance, EngineKind engine) {
  return solve(instance, engine, SearchLimits{}, nullptr).solutions_found;
}

std::vector<std::vector<RowId>> all_solutions(const Instance& instance, EngineKind engine,
                                              ColumnPolicy policy) {
  std::vector<std::vector<RowId>> out;
  solve(instance, SolveOptions{engine, {}, policy},
        [&out](std::span<const RowId> rows) { out.emplace_back(rows.begin(), rows.end()); });
  return out;
}

bool check_solution(const Instance& instance, std::span<const RowId> rows) {
  std::vector<std::uint8_t> hit(instance.column_count(), 0);
  bool disjoint = true;
  for (RowId id : rows) {
    for (auto c : instance.row(id)) {  // throws UnknownRowId
      if (hit[c]) disjoint = false;
      hit[c] = 1;
    }
  }
  if (!disjoint) return false;
  for (std::uint32_t c = 0; c < instance.column_count(); ++c)
    if (instance.column(c).kind == ColumnKind::Primary && !hit[c]) return false;
  return true;
}

std::set<std::set<RowId>> brute_force_solutions(const Instance& instance) {
  const std::size_t rows = instance.row_count();
  if (rows > 24) throw Error(Errc::TooLarge, std::to_string(rows) + " rows (limit 24)");
  std::set<std::set<RowId>> out;
  std::vector<RowId> selection;
  for (std::uint32_t mask = 0; mask < (1u << rows); ++mask) {
    selection.clear();
    for (std::uint32_t r = 0; r < rows; ++r)
      if (mask & (1u << r)) selection.push_back(RowId{r + 1});
    if (check_solution(instance, selection)) out.emplace(selection.begin(), selection.end());
  }
  return out;
}

}  // namespace xcover

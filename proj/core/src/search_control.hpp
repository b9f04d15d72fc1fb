#pragma once

#include <chrono>
#include <cstdint>

#include "xcover/solve.hpp"

namespace xcover::detail {

// Bookkeeping shared by both engines: stats, limits and the stop flag.
class SearchControl {
 public:
  SearchControl(const SearchLimits& limits, SearchStats& stats)
      : limits_(limits), stats_(stats), start_(std::chrono::steady_clock::now()) {}

  bool stopped() const noexcept { return stopped_; }

  void enter(std::uint32_t level) {
    ++stats_.nodes;
    if (level > stats_.max_depth) stats_.max_depth = level;
    if (limits_.time_budget && (stats_.nodes & 1023u) == 0 &&
        std::chrono::steady_clock::now() - start_ >= *limits_.time_budget) {
      halt(HaltReason::TimeLimit);
    }
  }

  void add_updates(std::uint32_t level, std::uint64_t count) {
    if (stats_.updates_per_level.size() <= level) stats_.updates_per_level.resize(level + 1, 0);
    stats_.updates_per_level[level] += count;
    stats_.total_updates += count;
    if (limits_.max_updates && stats_.total_updates >= *limits_.max_updates)
      halt(HaltReason::UpdateLimit);
  }

  void found_solution() {
    ++stats_.solutions_found;
    if (limits_.max_solutions && stats_.solutions_found >= *limits_.max_solutions)
      halt(HaltReason::SolutionLimit);
  }

  void finish() {
    stats_.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start_);
  }

 private:
  void halt(HaltReason reason) {
    if (!stopped_) {
      stopped_ = true;
      stats_.halted_by = reason;
    }
  }

  const SearchLimits& limits_;
  SearchStats& stats_;
  std::chrono::steady_clock::time_point start_;
  bool stopped_ = false;
};

}  // namespace xcover::detail

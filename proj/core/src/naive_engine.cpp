#include "xcover/naive_engine.hpp"

#include "search_control.hpp"

namespace xcover {

NaiveEngine::NaiveEngine(const Instance& instance)
    : instance_(instance),
      row_live_(instance.row_count(), 1),
      live_count_(instance.column_count(), 0),
      covered_(instance.column_count(), 0),
      uncovered_primaries_(instance.primary_count()) {
  const auto columns = static_cast<std::uint32_t>(instance.column_count());
  column_offsets_.assign(columns + 1, 0);
  for (std::uint32_t c = 0; c < columns; ++c) {
    live_count_[c] = instance.column_row_count(c);
    column_offsets_[c + 1] = column_offsets_[c] + live_count_[c];
    if (instance.column(c).kind == ColumnKind::Primary) primaries_.push_back(c);
  }
  column_rows_.resize(instance.node_count());
  std::vector<std::uint32_t> fill(column_offsets_.begin(), column_offsets_.end() - 1);
  for (std::uint32_t r = 0; r < instance.row_count(); ++r)
    for (auto c : instance.row(RowId{r + 1})) column_rows_[fill[c]++] = r;
}

std::optional<std::uint32_t> NaiveEngine::choose_column(ColumnPolicy policy) const {
  std::optional<std::uint32_t> best;
  for (auto c : primaries_) {
    if (covered_[c]) continue;
    if (policy == ColumnPolicy::FirstUncovered) return c;
    if (!best || live_count_[c] < live_count_[*best]) {
      best = c;
      if (live_count_[c] == 0) break;
    }
  }
  return best;
}

std::uint64_t NaiveEngine::remove_row(std::uint32_t row) {
  row_live_[row] = 0;
  removed_.push_back(row);
  auto cols = instance_.row(RowId{row + 1});
  for (auto c : cols) --live_count_[c];
  return cols.size();
}

std::uint64_t NaiveEngine::select_row(std::uint32_t row) {
  std::uint64_t updates = remove_row(row);
  for (auto j : instance_.row(RowId{row + 1})) {
    covered_[j] = 1;
    if (instance_.column(j).kind == ColumnKind::Primary) --uncovered_primaries_;
    for (auto i = column_offsets_[j]; i < column_offsets_[j + 1]; ++i) {
      auto other = column_rows_[i];
      if (row_live_[other]) updates += remove_row(other);
    }
  }
  return updates;
}

void NaiveEngine::deselect_row(std::uint32_t row, std::size_t log_mark) {
  while (removed_.size() > log_mark) {
    auto r = removed_.back();
    removed_.pop_back();
    row_live_[r] = 1;
    for (auto c : instance_.row(RowId{r + 1})) ++live_count_[c];
  }
  for (auto j : instance_.row(RowId{row + 1})) {
    covered_[j] = 0;
    if (instance_.column(j).kind == ColumnKind::Primary) ++uncovered_primaries_;
  }
}

SearchStats NaiveEngine::run(const SearchLimits& limits, ColumnPolicy policy,
                             const SolutionSink& emit) {
  SearchStats stats;
  detail::SearchControl control(limits, stats);

  struct Frame {
    std::vector<std::uint32_t> rows;  // candidate rows, snapshot at entry
    std::size_t next = 0;
    std::size_t log_mark = 0;
    std::uint32_t selected = 0;
  };
  std::vector<Frame> frames;
  std::vector<RowId> partial;
  std::uint32_t level = 0;

  enum class Step { Enter, NextRow, Backtrack, Done };
  Step step = Step::Enter;
  while (step != Step::Done) {
    switch (step) {
      case Step::Enter: {
        control.enter(level);
        if (control.stopped()) {
          step = Step::Done;
          break;
        }
        if (uncovered_primaries_ == 0) {
          control.found_solution();
          if (emit) emit(std::span<const RowId>(partial.data(), level));
          step = control.stopped() ? Step::Done : Step::Backtrack;
          break;
        }
        if (frames.size() <= level) frames.emplace_back();
        Frame& frame = frames[level];
        const auto c = *choose_column(policy);
        frame.rows.clear();
        for (auto i = column_offsets_[c]; i < column_offsets_[c + 1]; ++i)
          if (row_live_[column_rows_[i]]) frame.rows.push_back(column_rows_[i]);
        frame.next = 0;
        step = Step::NextRow;
        break;
      }
      case Step::NextRow: {
        Frame& frame = frames[level];
        if (frame.next == frame.rows.size()) {
          step = Step::Backtrack;
          break;
        }
        frame.selected = frame.rows[frame.next++];
        frame.log_mark = removed_.size();
        if (partial.size() <= level) partial.resize(level + 1);
        partial[level] = RowId{frame.selected + 1};
        control.add_updates(level, select_row(frame.selected));
        if (control.stopped()) {
          deselect_row(frame.selected, frame.log_mark);
          step = Step::Done;
          break;
        }
        ++level;
        step = Step::Enter;
        break;
      }
      case Step::Backtrack: {
        if (level == 0) {
          step = Step::Done;
          break;
        }
        --level;
        deselect_row(frames[level].selected, frames[level].log_mark);
        step = Step::NextRow;
        break;
      }
      case Step::Done:
        break;
    }
  }

  // Early halt: undo the selections still on the stack.
  while (level > 0) {
    --level;
    deselect_row(frames[level].selected, frames[level].log_mark);
  }
  control.finish();
  return stats;
}

std::string NaiveEngine::serialize_state() const {
  std::string out;
  auto put = [&out](const auto& vec) {
    out.append(reinterpret_cast<const char*>(vec.data()), vec.size() * sizeof(vec[0]));
    out.push_back('|');
  };
  put(row_live_);
  put(live_count_);
  put(covered_);
  out += std::to_string(uncovered_primaries_) + "|" + std::to_string(removed_.size());
  return out;
}

}  // namespace xcover

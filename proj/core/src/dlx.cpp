#include "xcover/dlx.hpp"

#include <cstdio>
#include <cstdlib>

#include "search_control.hpp"

namespace xcover {

DlxArena::DlxArena(const Instance& instance) {
  const auto columns = static_cast<std::uint32_t>(instance.column_count());
  header_count_ = columns + 1;
  const std::size_t total = header_count_ + instance.node_count();
  left_.resize(total);
  right_.resize(total);
  up_.resize(total);
  down_.resize(total);
  column_.resize(total);
  row_.assign(total, 0);
  size_.assign(header_count_, 0);

  for (std::uint32_t h = 0; h < header_count_; ++h) {
    left_[h] = right_[h] = up_[h] = down_[h] = column_[h] = h;
  }
  // Root ring over primary headers in ordinal order.
  std::uint32_t last = 0;
  for (std::uint32_t c = 0; c < columns; ++c) {
    if (instance.column(c).kind != ColumnKind::Primary) continue;
    const std::uint32_t h = c + 1;
    right_[last] = h;
    left_[h] = last;
    last = h;
  }
  right_[last] = 0;
  left_[0] = last;

  std::uint32_t node = header_count_;
  for (std::uint32_t r = 1; r <= instance.row_count(); ++r) {
    const std::uint32_t first = node;
    for (auto c : instance.row(RowId{r})) {
      const std::uint32_t h = c + 1;
      column_[node] = h;
      row_[node] = r;
      // Append at the bottom of the column list.
      up_[node] = up_[h];
      down_[node] = h;
      down_[up_[h]] = node;
      up_[h] = node;
      ++size_[h];
      left_[node] = node == first ? node : node - 1;
      right_[node] = first;
      if (node != first) right_[node - 1] = node;
      left_[first] = node;
      ++node;
    }
  }
}

std::uint64_t DlxArena::cover_header(std::uint32_t c) {
  std::uint64_t unlinks = 0;
  right_[left_[c]] = right_[c];
  left_[right_[c]] = left_[c];
  for (std::uint32_t i = down_[c]; i != c; i = down_[i]) {
    for (std::uint32_t j = right_[i]; j != i; j = right_[j]) {
      down_[up_[j]] = down_[j];
      up_[down_[j]] = up_[j];
      --size_[column_[j]];
      ++unlinks;
    }
  }
  return unlinks;
}

void DlxArena::uncover_header(std::uint32_t c) {
  for (std::uint32_t i = up_[c]; i != c; i = up_[i]) {
    for (std::uint32_t j = left_[i]; j != i; j = left_[j]) {
      ++size_[column_[j]];
      down_[up_[j]] = j;
      up_[down_[j]] = j;
    }
  }
  right_[left_[c]] = c;
  left_[right_[c]] = c;
}

std::uint64_t DlxArena::cover(std::uint32_t column) {
  const std::uint32_t h = column + 1;
  if (h >= header_count_) {
    std::fprintf(stderr, "DlxArena::cover: column %u out of range\n", column);
    std::abort();
  }
  cover_stack_.push_back(h);
  return cover_header(h);
}

void DlxArena::uncover(std::uint32_t column) {
  const std::uint32_t h = column + 1;
  if (cover_stack_.empty() || cover_stack_.back() != h) {
    std::fprintf(stderr, "DlxArena::uncover: column %u is not the most recently covered column\n",
                 column);
    std::abort();
  }
  cover_stack_.pop_back();
  uncover_header(h);
}

std::vector<std::uint32_t> DlxArena::ring() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t h = right_[0]; h != 0; h = right_[h]) out.push_back(h - 1);
  return out;
}

std::optional<std::uint32_t> DlxArena::choose_header(ColumnPolicy policy) const {
  std::uint32_t best = right_[0];
  if (best == 0) return std::nullopt;
  if (policy == ColumnPolicy::FirstUncovered) return best;
  // Strict comparison keeps the first (smallest-ordinal) column on ties.
  for (std::uint32_t h = right_[best]; h != 0 && size_[best] != 0; h = right_[h]) {
    if (size_[h] < size_[best]) best = h;
  }
  return best;
}

std::optional<std::uint32_t> DlxArena::choose_column(ColumnPolicy policy) const {
  auto h = choose_header(policy);
  if (!h) return std::nullopt;
  return *h - 1;
}

std::string DlxArena::check_links() const {
  const std::size_t total = left_.size();
  for (std::uint32_t h = right_[0];; h = right_[h]) {
    if (left_[right_[h]] != h || right_[left_[h]] != h)
      return "root ring broken at header " + std::to_string(h);
    if (h == 0) break;
  }
  for (std::uint32_t x = header_count_; x < total; ++x) {
    if (left_[right_[x]] != x || right_[left_[x]] != x)
      return "row ring broken at node " + std::to_string(x);
  }
  for (std::uint32_t h = 1; h < header_count_; ++h) {
    std::uint32_t count = 0;
    for (std::uint32_t x = down_[h];; x = down_[x]) {
      if (up_[down_[x]] != x || down_[up_[x]] != x)
        return "column list broken at node " + std::to_string(x);
      if (x == h) break;
      if (column_[x] != h) return "node " + std::to_string(x) + " in wrong column";
      if (++count > total) return "column list of header " + std::to_string(h) + " does not close";
    }
    if (count != size_[h])
      return "size mismatch at header " + std::to_string(h) + ": " + std::to_string(size_[h]) +
             " != " + std::to_string(count);
  }
  return {};
}

std::size_t DlxArena::live_nodes() const {
  std::size_t count = 0;
  for (std::uint32_t h = 1; h < header_count_; ++h)
    for (std::uint32_t x = down_[h]; x != h; x = down_[x]) ++count;
  return count;
}

std::string DlxArena::serialize() const {
  std::string out;
  auto put = [&out](const std::vector<std::uint32_t>& v) {
    out.append(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(std::uint32_t));
    out.push_back('|');
  };
  put(left_);
  put(right_);
  put(up_);
  put(down_);
  put(column_);
  put(row_);
  put(size_);
  put(cover_stack_);
  return out;
}

SearchStats DlxEngine::run(const SearchLimits& limits, ColumnPolicy policy,
                           const SolutionSink& emit) {
  SearchStats stats;
  detail::SearchControl control(limits, stats);
  DlxArena& a = arena_;

  std::vector<std::uint32_t> chosen;   // header per level
  std::vector<std::uint32_t> current;  // row node per level
  std::vector<RowId> partial;
  std::uint32_t level = 0;

  auto cover_row = [&a](std::uint32_t r) {
    std::uint64_t n = 0;
    for (std::uint32_t j = a.right_[r]; j != r; j = a.right_[j]) n += a.cover_header(a.column_[j]);
    return n;
  };
  auto uncover_row = [&a](std::uint32_t r) {
    for (std::uint32_t j = a.left_[r]; j != r; j = a.left_[j]) a.uncover_header(a.column_[j]);
  };

  enum class Step { Enter, TryRow, Backtrack, Done };
  Step step = Step::Enter;
  bool unwind_current_column = false;
  while (step != Step::Done) {
    switch (step) {
      case Step::Enter: {
        control.enter(level);
        if (control.stopped()) {
          step = Step::Done;
          break;
        }
        auto c = a.choose_header(policy);
        if (!c) {
          control.found_solution();
          if (emit) emit(std::span<const RowId>(partial.data(), level));
          step = control.stopped() ? Step::Done : Step::Backtrack;
          break;
        }
        if (chosen.size() <= level) {
          chosen.resize(level + 1);
          current.resize(level + 1);
          partial.resize(level + 1);
        }
        chosen[level] = *c;
        current[level] = a.down_[*c];
        control.add_updates(level, a.cover_header(*c));
        if (control.stopped()) {
          unwind_current_column = true;
          step = Step::Done;
          break;
        }
        step = Step::TryRow;
        break;
      }
      case Step::TryRow: {
        const std::uint32_t c = chosen[level];
        const std::uint32_t r = current[level];
        if (r == c) {
          a.uncover_header(c);
          step = Step::Backtrack;
          break;
        }
        partial[level] = RowId{a.row_[r]};
        control.add_updates(level, cover_row(r));
        if (control.stopped()) {
          uncover_row(r);
          unwind_current_column = true;
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
        uncover_row(current[level]);
        current[level] = a.down_[current[level]];
        step = Step::TryRow;
        break;
      }
      case Step::Done:
        break;
    }
  }

  // Early halt: restore everything still covered.
  if (unwind_current_column) a.uncover_header(chosen[level]);
  while (level > 0) {
    --level;
    uncover_row(current[level]);
    a.uncover_header(chosen[level]);
  }
  control.finish();
  return stats;
}

}  // namespace xcover

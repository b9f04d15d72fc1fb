#include "xcover/instance.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "xcover/error.hpp"

namespace xcover {

bool is_valid_label(std::string_view label) noexcept {
  if (label.empty() || label.front() == '%' || label.front() == '#') return false;
  return label.find_first_of(" \t\n\r") == std::string_view::npos;
}

std::string Warning::describe() const {
  switch (kind) {
    case Kind::UncoverablePrimary:
      return "primary column '" + label + "' appears in no row";
    case Kind::DuplicateRow:
      return "rows " + std::to_string(first.value) + " and " + std::to_string(second.value) +
             " are identical";
    case Kind::EmptyInstance:
      return "instance has no rows";
  }
  return {};
}

namespace {

template <typename Label>
void check_labels(std::span<const Label> labels) {
  if (labels.empty()) throw Error(Errc::EmptyRow, "row has no labels");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::string_view a = labels[i];
    if (!is_valid_label(a)) throw Error(Errc::InvalidLabel, "'" + std::string(a) + "'");
  }
  if (labels.size() <= 16) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        if (std::string_view(labels[i]) == std::string_view(labels[j]))
          throw Error(Errc::DuplicateLabelInRow, "'" + std::string(labels[i]) + "'");
    return;
  }
  std::vector<std::string_view> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw Error(Errc::DuplicateLabelInRow, "'" + std::string(*dup) + "'");
}

}  // namespace

std::uint32_t Instance::register_column(std::string_view label, ColumnKind kind) {
  if (columns_.size() >= std::numeric_limits<std::uint32_t>::max())
    throw Error(Errc::TooLarge, "too many columns");
  auto ordinal = static_cast<std::uint32_t>(columns_.size());
  columns_.push_back(Column{std::string(label), kind});
  column_rows_.push_back(0);
  index_.emplace(std::string(label), ordinal);
  if (kind == ColumnKind::Primary) ++primary_count_;
  return ordinal;
}

template <typename Label>
void Instance::declare_impl(std::span<const Label> labels, ColumnKind kind) {
  // Validate the whole batch before registering anything.
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::string_view label = labels[i];
    if (!is_valid_label(label)) throw Error(Errc::InvalidLabel, "'" + std::string(label) + "'");
    if (auto it = index_.find(label); it != index_.end()) {
      if (column_rows_[it->second] > 0)
        throw Error(Errc::LateDeclaration, "'" + std::string(label) + "' is already used by a row");
      throw Error(Errc::DuplicateColumn, "'" + std::string(label) + "'");
    }
    for (std::size_t j = 0; j < i; ++j)
      if (std::string_view(labels[j]) == label)
        throw Error(Errc::DuplicateColumn, "'" + std::string(label) + "'");
  }
  for (const auto& label : labels) register_column(label, kind);
}

void Instance::declare_secondary(std::span<const std::string> labels) {
  declare_impl(labels, ColumnKind::Secondary);
}

void Instance::declare_secondary(std::initializer_list<std::string> labels) {
  declare_impl(std::span<const std::string>(labels.begin(), labels.size()), ColumnKind::Secondary);
}

void Instance::declare_primary(std::span<const std::string> labels) {
  declare_impl(labels, ColumnKind::Primary);
}

void Instance::declare_primary(std::initializer_list<std::string> labels) {
  declare_impl(std::span<const std::string>(labels.begin(), labels.size()), ColumnKind::Primary);
}

template <typename Label>
RowId Instance::add_row_impl(std::span<const Label> labels) {
  check_labels(labels);
  if (row_columns_.size() + labels.size() > std::numeric_limits<std::uint32_t>::max())
    throw Error(Errc::TooLarge, "too many nodes");
  for (const auto& label : labels) {
    std::string_view key = label;
    auto it = index_.find(key);
    std::uint32_t ordinal =
        it != index_.end() ? it->second : register_column(key, ColumnKind::Primary);
    row_columns_.push_back(ordinal);
    ++column_rows_[ordinal];
  }
  row_offsets_.push_back(static_cast<std::uint32_t>(row_columns_.size()));
  return RowId{static_cast<std::uint32_t>(row_offsets_.size() - 1)};
}

RowId Instance::add_row(std::span<const std::string> labels) { return add_row_impl(labels); }

RowId Instance::add_row(std::span<const std::string_view> labels) { return add_row_impl(labels); }

RowId Instance::add_row(std::initializer_list<std::string> labels) {
  return add_row_impl(std::span<const std::string>(labels.begin(), labels.size()));
}

std::int64_t Instance::find_column(std::string_view label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::span<const std::uint32_t> Instance::row(RowId id) const {
  if (!contains(id)) throw Error(Errc::UnknownRowId, std::to_string(id.value));
  auto begin = row_offsets_[id.value - 1];
  auto end = row_offsets_[id.value];
  return {row_columns_.data() + begin, end - begin};
}

std::vector<Warning> Instance::validate() const {
  std::vector<Warning> out;
  for (std::uint32_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c].kind == ColumnKind::Primary && column_rows_[c] == 0) {
      Warning w{Warning::Kind::UncoverablePrimary, columns_[c].label};
      out.push_back(std::move(w));
    }
  }
  // Identical column sets; each later copy is reported against the first.
  std::map<std::vector<std::uint32_t>, RowId> seen;
  for (std::uint32_t r = 1; r <= row_count(); ++r) {
    auto cols = row(RowId{r});
    std::vector<std::uint32_t> key(cols.begin(), cols.end());
    std::sort(key.begin(), key.end());
    auto [it, inserted] = seen.emplace(std::move(key), RowId{r});
    if (!inserted) {
      Warning w{Warning::Kind::DuplicateRow, {}, it->second, RowId{r}};
      out.push_back(std::move(w));
    }
  }
  return out;
}

Solution make_solution(const Instance& instance, std::span<const RowId> rows) {
  Solution s;
  s.rows.assign(rows.begin(), rows.end());
  s.labels.reserve(rows.size());
  for (RowId id : rows) {
    std::vector<std::string> labels;
    for (auto c : instance.row(id)) labels.push_back(instance.column(c).label);
    s.labels.push_back(std::move(labels));
  }
  return s;
}

}  // namespace xcover

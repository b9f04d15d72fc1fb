#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace xcover {

enum class ColumnKind : std::uint8_t {
  Primary,    // covered exactly once
  Secondary,  // covered at most once
};

/// 1-based ordinal of a row in declaration order.
struct RowId {
  std::uint32_t value = 0;

  friend auto operator<=>(const RowId&, const RowId&) = default;
};

struct Column {
  std::string label;
  ColumnKind kind = ColumnKind::Primary;

  friend bool operator==(const Column&, const Column&) = default;
};

/// True when `label` is usable as a column label: non-empty, no whitespace
/// or line breaks, and not starting with the directive/comment markers '%'
/// and '#' of the instance text format.
bool is_valid_label(std::string_view label) noexcept;

struct Warning {
  enum class Kind { UncoverablePrimary, DuplicateRow, EmptyInstance };

  Kind kind = Kind::UncoverablePrimary;
  std::string label;    // UncoverablePrimary
  RowId first{};        // DuplicateRow
  RowId second{};       // DuplicateRow
  std::size_t line = 0; // set by the reader when known

  std::string describe() const;
};

/// An exact-cover instance: an ordered list of labeled columns and an
/// ordered list of rows, each row a set of column ordinals.
///
/// Column ordinals are assigned in declaration order: explicitly declared
/// columns first (in call order), then columns auto-registered as primary
/// the first time a row mentions them. Rows are stored in one flat array.
class Instance {
 public:
  Instance() = default;

  /// Registers `labels` as secondary (at-most-once) columns.
  /// Throws DuplicateColumn if a label is already declared, LateDeclaration
  /// if a row already uses it.
  void declare_secondary(std::span<const std::string> labels);
  void declare_secondary(std::initializer_list<std::string> labels);

  /// Registers `labels` as primary columns ahead of any row, fixing their
  /// ordinals. A primary column declared here may appear in no row.
  void declare_primary(std::span<const std::string> labels);
  void declare_primary(std::initializer_list<std::string> labels);

  /// Appends a row. Unseen labels become primary columns in order of
  /// appearance. Throws EmptyRow, DuplicateLabelInRow or InvalidLabel.
  RowId add_row(std::span<const std::string> labels);
  RowId add_row(std::initializer_list<std::string> labels);
  RowId add_row(std::span<const std::string_view> labels);

  std::size_t column_count() const noexcept { return columns_.size(); }
  std::size_t primary_count() const noexcept { return primary_count_; }
  std::size_t row_count() const noexcept { return row_offsets_.size() - 1; }
  std::size_t node_count() const noexcept { return row_columns_.size(); }

  const std::vector<Column>& columns() const noexcept { return columns_; }
  const Column& column(std::uint32_t ordinal) const { return columns_.at(ordinal); }

  /// Column ordinal for `label`, or -1 when absent.
  std::int64_t find_column(std::string_view label) const;

  /// Column ordinals of row `id`, in the row's declaration order.
  std::span<const std::uint32_t> row(RowId id) const;

  /// Number of rows that mention column `ordinal`.
  std::uint32_t column_row_count(std::uint32_t ordinal) const { return column_rows_.at(ordinal); }

  bool contains(RowId id) const noexcept { return id.value >= 1 && id.value <= row_count(); }

  /// Structural checks that never throw: primary columns with no rows and
  /// rows with identical column sets.
  std::vector<Warning> validate() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.columns_ == b.columns_ && a.row_offsets_ == b.row_offsets_ &&
           a.row_columns_ == b.row_columns_;
  }

 private:
  template <typename Label>
  RowId add_row_impl(std::span<const Label> labels);
  template <typename Label>
  void declare_impl(std::span<const Label> labels, ColumnKind kind);

  std::uint32_t register_column(std::string_view label, ColumnKind kind);

  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<Column> columns_;
  std::unordered_map<std::string, std::uint32_t, StringHash, std::equal_to<>> index_;
  std::vector<std::uint32_t> column_rows_;
  std::vector<std::uint32_t> row_offsets_{0};
  std::vector<std::uint32_t> row_columns_;
  std::size_t primary_count_ = 0;
};

/// A selected set of rows together with their resolved labels.
struct Solution {
  std::vector<RowId> rows;                        // selection order
  std::vector<std::vector<std::string>> labels;   // per row, declaration order
};

Solution make_solution(const Instance& instance, std::span<const RowId> rows);

}  // namespace xcover

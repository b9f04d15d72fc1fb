#include "xcover/io.hpp"

#include <cstdio>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "xcover/error.hpp"

namespace xcover {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n' || text[i] == '\r') {
      out.push_back(text.substr(start, i - start));
      if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      start = i + 1;
    }
  }
  if (start < text.size()) out.push_back(text.substr(start));
  return out;
}

std::size_t find_invalid_utf8(std::string_view text) noexcept {
  const auto* s = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    const unsigned char c = s[i];
    std::size_t len;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > n) return i;
    for (std::size_t k = 1; k < len; ++k) {
      if ((s[i + k] & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (s[i + k] & 0x3F);
    }
    // Overlong forms, surrogates and out-of-range code points.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF)
      return i;
    i += len;
  }
  return std::string_view::npos;
}

Instance read_instance(std::string_view text, std::vector<Warning>* warnings) {
  Instance instance;
  const auto lines = split_lines(text);
  bool seen_row = false;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t line_no = n + 1;
    const std::string_view line = lines[n];
    if (auto bad = find_invalid_utf8(line); bad != std::string_view::npos)
      throw Error(Errc::BadEncoding, "invalid UTF-8 at byte " + std::to_string(bad + 1), line_no);
    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    try {
      if (fields.front().front() == '%') {
        const std::string_view name = fields.front();
        std::vector<std::string> labels(fields.begin() + 1, fields.end());
        if (name != "%secondary" && name != "%primary")
          throw Error(Errc::BadDirective, "unknown directive '" + std::string(name) + "'");
        if (seen_row) throw Error(Errc::LateDirective, std::string(name) + " after the first row");
        if (name == "%secondary")
          instance.declare_secondary(labels);
        else
          instance.declare_primary(labels);
        continue;
      }
      instance.add_row(std::span<const std::string_view>(fields));
      seen_row = true;
    } catch (const Error& e) {
      if (e.line() != 0) throw;
      throw Error(e.code(), e.detail(), line_no);
    }
  }
  if (warnings && instance.row_count() == 0) {
    Warning w;
    w.kind = Warning::Kind::EmptyInstance;
    warnings->push_back(std::move(w));
  }
  return instance;
}

Instance read_instance(std::istream& in, std::vector<Warning>* warnings) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return read_instance(std::string_view(text), warnings);
}

namespace {

// Column order a reader reconstructs when only "%secondary" is written:
// secondary columns in ordinal order, then primaries by first appearance.
bool order_implied_by_rows(const Instance& instance) {
  std::vector<std::uint32_t> implied;
  std::vector<std::uint8_t> placed(instance.column_count(), 0);
  for (std::uint32_t c = 0; c < instance.column_count(); ++c) {
    if (instance.column(c).kind == ColumnKind::Secondary) {
      implied.push_back(c);
      placed[c] = 1;
    }
  }
  for (std::uint32_t r = 1; r <= instance.row_count(); ++r) {
    for (auto c : instance.row(RowId{r})) {
      if (!placed[c]) {
        implied.push_back(c);
        placed[c] = 1;
      }
    }
  }
  if (implied.size() != instance.column_count()) return false;
  for (std::uint32_t i = 0; i < implied.size(); ++i)
    if (implied[i] != i) return false;
  return true;
}

}  // namespace

void write_instance(std::ostream& out, const Instance& instance) {
  const auto& columns = instance.columns();
  if (order_implied_by_rows(instance)) {
    bool any = false;
    for (const auto& col : columns) {
      if (col.kind != ColumnKind::Secondary) continue;
      out << (any ? " " : "%secondary ") << col.label;
      any = true;
    }
    if (any) out << '\n';
  } else {
    // Declare every column, grouping consecutive columns of the same kind.
    for (std::size_t i = 0; i < columns.size();) {
      const ColumnKind kind = columns[i].kind;
      out << (kind == ColumnKind::Primary ? "%primary" : "%secondary");
      for (; i < columns.size() && columns[i].kind == kind; ++i) out << ' ' << columns[i].label;
      out << '\n';
    }
  }
  for (std::uint32_t r = 1; r <= instance.row_count(); ++r) {
    bool first = true;
    for (auto c : instance.row(RowId{r})) {
      if (!first) out << ' ';
      out << columns[c].label;
      first = false;
    }
    out << '\n';
  }
}

std::string write_instance(const Instance& instance) {
  std::ostringstream out;
  write_instance(out, instance);
  return out.str();
}

std::string write_solution(const Solution& solution, std::uint64_t ordinal) {
  std::string out = "SOLUTION " + std::to_string(ordinal) + "\n";
  for (const auto& labels : solution.labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) out += ' ';
      out += labels[i];
    }
    out += '\n';
  }
  return out;
}

std::string write_stats(const SearchStats& stats) {
  char buf[64];
  std::string out;
  out += "solutions " + std::to_string(stats.solutions_found) + "\n";
  out += "total_updates " + std::to_string(stats.total_updates) + "\n";
  out += "nodes " + std::to_string(stats.nodes) + "\n";
  out += "max_depth " + std::to_string(stats.max_depth) + "\n";
  std::snprintf(buf, sizeof buf, "%.6f", std::chrono::duration<double>(stats.wall_time).count());
  out += "wall_time_s " + std::string(buf) + "\n";
  std::snprintf(buf, sizeof buf, "%.0f", stats.updates_per_second());
  out += "updates_per_second " + std::string(buf) + "\n";
  out += "halted_by " + std::string(halt_reason_name(stats.halted_by)) + "\n";
  for (std::size_t k = 0; k < stats.updates_per_level.size(); ++k)
    out += "level " + std::to_string(k) + " " + std::to_string(stats.updates_per_level[k]) + "\n";
  return out;
}

}  // namespace xcover

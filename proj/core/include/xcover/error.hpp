#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace xcover {

enum class Errc {
  InvalidLabel,
  DuplicateColumn,
  LateDeclaration,
  EmptyRow,
  DuplicateLabelInRow,
  UnknownRowId,
  TooLarge,
  BadDirective,
  LateDirective,
  BadEncoding,
  BadCharacter,
  EmptyBoard,
  IncompleteSolution,
  TransformEscape,
  MalformedSolution,
  Overflow,
  InconsistentGivens,
  BadDimensions,
  BadToken,
  IncompleteGrid,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

// All library failures are reported as Error. `line()` is 1-based when the
// failure is tied to a line of text input, 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::size_t line = 0);

  Errc code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }
  /// The message without the code and line prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::size_t line_;
  std::string detail_;
};

}  // namespace xcover

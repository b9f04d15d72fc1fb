#include "xcover/error.hpp"

namespace xcover {

namespace {

std::string format_message(Errc code, const std::string& message, std::size_t line) {
  std::string out;
  if (line != 0) out += "line " + std::to_string(line) + ": ";
  out += errc_name(code);
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidLabel: return "InvalidLabel";
    case Errc::DuplicateColumn: return "DuplicateColumn";
    case Errc::LateDeclaration: return "LateDeclaration";
    case Errc::EmptyRow: return "EmptyRow";
    case Errc::DuplicateLabelInRow: return "DuplicateLabelInRow";
    case Errc::UnknownRowId: return "UnknownRowId";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadDirective: return "BadDirective";
    case Errc::LateDirective: return "LateDirective";
    case Errc::BadEncoding: return "BadEncoding";
    case Errc::BadCharacter: return "BadCharacter";
    case Errc::EmptyBoard: return "EmptyBoard";
    case Errc::IncompleteSolution: return "IncompleteSolution";
    case Errc::TransformEscape: return "TransformEscape";
    case Errc::MalformedSolution: return "MalformedSolution";
    case Errc::Overflow: return "Overflow";
    case Errc::InconsistentGivens: return "InconsistentGivens";
    case Errc::BadDimensions: return "BadDimensions";
    case Errc::BadToken: return "BadToken";
    case Errc::IncompleteGrid: return "IncompleteGrid";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::size_t line)
    : std::runtime_error(format_message(code, message, line)), code_(code), line_(line), detail_(message) {}

}  // namespace xcover

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xcover::cli {

// Exit statuses shared by all subcommands.
inline constexpr int kFound = 0;
inline constexpr int kNotFound = 1;
inline constexpr int kInputError = 2;
inline constexpr int kMultiple = 3;

/// Runs the command line `args` (args[0] is the program name). Solutions and
/// results go to `out`; diagnostics and stats to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace xcover::cli

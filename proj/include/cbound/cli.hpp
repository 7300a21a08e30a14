#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cbound::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool with `args` (excluding the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "4,4,4,10" into integers; throws cbound::ParseError.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace cbound::cli

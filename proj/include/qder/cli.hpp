#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qder {

// Exit codes of the qder tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // computation failed or a check did not pass
inline constexpr int kExitUsage = 2;    // bad flags, unreadable input, unknown quandle source

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qder

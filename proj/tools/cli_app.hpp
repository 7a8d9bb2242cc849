#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gyb::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResourceCap = 3 };

inline constexpr const char* kSchema = "gybinv/1";

/// Runs the command line `args` (without the program name). Everything the
/// command prints goes to `out`; diagnostics and warnings go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gyb::cli

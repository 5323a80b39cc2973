#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpi::cli {

/// Environment variable holding the default working digits.
inline constexpr const char* kDigitsEnv = "QPI_DIGITS";

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kInconclusive = 3 };

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpi::cli

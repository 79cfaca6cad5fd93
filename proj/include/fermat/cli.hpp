#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fermat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitAuditFail = 3;
inline constexpr int kExitVerifyFail = 4;

/// Runs the command line `args` (without the program name). Reports go to
/// out, diagnostics to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fermat

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace handlecalc::cli {

/// Exit codes: 0 success, 1 user error or a requested check failed,
/// 2 internal invariant violation.
inline constexpr int kOk = 0;
inline constexpr int kUserError = 1;
inline constexpr int kInternalError = 2;

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace handlecalc::cli

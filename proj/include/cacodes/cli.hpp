#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cacodes::cli {

inline constexpr const char* kToolName = "cacodes";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one subcommand. `args` excludes the program name. JSON results and
/// domain error objects go to `out`; usage text goes to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cacodes::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tensorframe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitMathFailure = 2;

/// Runs `tensorframe <command> [flags]`. args[0] is the program name.
/// Reports go to `out`, diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tensorframe::cli

#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace invmeans::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one meanctl invocation. `args` excludes the program name.
/// Results go to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace invmeans::cli

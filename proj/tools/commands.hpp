#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dpsi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitCoverage = 2;
inline constexpr int kExitUsage = 64;

/// Runs the `dpsi` front end. `args` excludes the program name. Tables go
/// to `out` (or --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpsi::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homometry::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kFalsified = 3 };

/// Runs one CLI invocation. argv[0] is the program name. Results go to `out`
/// (or the --out file); diagnostics go to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

/// Parses "1..8", "-2..2" or "1,3,5".
std::vector<long long> parse_lags(const std::string& text);

}  // namespace homometry::cli

#pragma once

// Command-line front end: table | verify | biject | series.
//
// Exit status: 0 when every requested computation succeeded, 1 when a check
// or bijection verification failed, 2 on a usage error.

#include <ostream>
#include <string>
#include <vector>

namespace crankshaft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Parses "a..b" or a single integer into the inclusive list of values.
/// Throws std::invalid_argument on malformed or empty ranges.
std::vector<long long> parse_range(const std::string &text);

} // namespace crankshaft::cli

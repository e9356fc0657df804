#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace digrev::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args` excludes the program name. Reads `-` inputs
/// from `in`; errors go to `err` as one line of JSON.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace digrev::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crystal::cli {

/// Exit codes: 0 success, 1 usage or input error, 2 verification mismatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crystal::cli

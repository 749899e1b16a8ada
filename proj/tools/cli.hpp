#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scl::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPropertyViolated = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kResourceCap = 3;

// Runs one `scl` invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scl::cli

// Acceptance gate: runs every criterion at the full level and prints one
// pass/fail line each. Exit status is nonzero if any gating criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "scl/acceptance.hpp"

int main(int argc, char** argv) {
  scl::acceptance::Level level = scl::acceptance::Level::kFull;
  if (argc > 1 && std::string(argv[1]) == "--quick") level = scl::acceptance::Level::kQuick;

  const auto results = scl::acceptance::run(level, scl::acceptance::kDefaultSeed, [](const auto& r) {
    std::cout << scl::acceptance::format_line(r) << std::endl;
  });
  const bool ok = scl::acceptance::all_passed(results);
  std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}

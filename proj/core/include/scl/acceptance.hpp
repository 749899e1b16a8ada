#pragma once

// The acceptance suite: every end-to-end property the library is expected to
// demonstrate, each with a pinned tolerance and time budget. Shared by the
// `scl verify acceptance` command and the acceptance test binary.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace scl::acceptance {

enum class Level {
  kQuick,  // trimmed ranges and sample counts, for CI
  kFull,
};

struct CriterionResult {
  std::string id;  // "1" .. "10", or "6s" for the non-gating stretch check
  std::string title;
  bool passed = false;
  bool gating = true;
  double seconds = 0.0;
  double time_limit = 0.0;
  std::string detail;
};

using Reporter = std::function<void(const CriterionResult&)>;

inline constexpr std::uint64_t kDefaultSeed = 20221017;

std::vector<CriterionResult> run(Level level, std::uint64_t seed = kDefaultSeed, const Reporter& report = {});

// "[PASS] 3  free split bound ... (0.41 s / 15 s) detail"
std::string format_line(const CriterionResult& r);

// True iff every gating criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace scl::acceptance

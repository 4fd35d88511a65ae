#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "realtrace/testing/report.hpp"

namespace realtrace {

inline constexpr std::uint64_t kDefaultSeed = 7;
inline constexpr int kCriterionCount = 9;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Check counts, or the first failing input.
  std::string detail;
};

/// Runs criterion `id` (1..9). Each criterion draws from its own stream
/// derived from `seed`, so results do not depend on scheduling.
CriterionResult run_criterion(int id, std::uint64_t seed);

/// All criteria, run concurrently, in id order.
std::vector<CriterionResult> run_criteria(std::uint64_t seed);

RunReport battery_report(std::uint64_t seed);

}  // namespace realtrace

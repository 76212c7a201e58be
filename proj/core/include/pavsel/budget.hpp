#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pavsel {

// Caps on exhaustive enumeration. Exceeding a cap raises BudgetExceededError
// before any enumeration work starts, so callers can rely on bounded runtime.

struct OracleBudget {
  std::uint64_t max_combinations = 10'000'000;  // committees C(m, k)
};

struct AuditBudget {
  std::uint64_t max_candidate_sets = 5'000'000;  // witness sets, summed over group sizes
};

struct BudgetExceededError : std::runtime_error {
  explicit BudgetExceededError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace pavsel

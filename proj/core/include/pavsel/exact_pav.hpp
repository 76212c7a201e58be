#pragma once

#include <cstdint>

#include "pavsel/budget.hpp"
#include "pavsel/election.hpp"
#include "pavsel/rational.hpp"

namespace pavsel {

struct ExactPavResult {
  Committee committee;  // the maximizer whose index sequence is lex smallest
  Rational score;
};

// C(m, k), saturating at 2^64-1 so budget comparisons stay safe.
std::uint64_t committee_count(int m, int k);

// Exhaustive argmax of the score over all size-k committees. Throws
// BudgetExceededError when C(m, k) exceeds the budget, before enumerating.
ExactPavResult exact_pav(const Election& e, int k, const OracleBudget& budget = {});

}  // namespace pavsel

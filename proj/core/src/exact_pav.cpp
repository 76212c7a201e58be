#include "pavsel/exact_pav.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pavsel/pav_score.hpp"

namespace pavsel {

std::uint64_t committee_count(int m, int k) {
  if (k < 0 || k > m) return 0;
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= m - k + i;
    c /= i;  // exact: any prefix of the product is divisible by i!
  }
  const BigInt cap = std::numeric_limits<std::uint64_t>::max();
  if (c > cap) return std::numeric_limits<std::uint64_t>::max();
  return c.convert_to<std::uint64_t>();
}

ExactPavResult exact_pav(const Election& e, int k, const OracleBudget& budget) {
  const int m = e.num_candidates();
  const int n = e.num_voters();
  if (k < 1 || k > m) throw std::invalid_argument("exact_pav: committee size out of range");

  const std::uint64_t combos = committee_count(m, k);
  if (combos > budget.max_combinations)
    throw BudgetExceededError("exact_pav: C(" + std::to_string(m) + "," + std::to_string(k) +
                              ") = " + std::to_string(combos) + " committees exceeds budget " +
                              std::to_string(budget.max_combinations));

  // Lexicographic enumeration with an incrementally maintained score: moving
  // to the next combination only touches the suffix that changes.
  std::vector<int> counts(static_cast<size_t>(n), 0);
  Rational score(0);
  auto add = [&](int c) {
    for (int i : e.approvers(c)) {
      int& w = counts[static_cast<size_t>(i)];
      ++w;
      score += Rational(1, w);
    }
  };
  auto remove = [&](int c) {
    for (int i : e.approvers(c)) {
      int& w = counts[static_cast<size_t>(i)];
      score -= Rational(1, w);
      --w;
    }
  };

  std::vector<int> sel(static_cast<size_t>(k));
  std::iota(sel.begin(), sel.end(), 0);
  for (int c : sel) add(c);

  std::vector<int> best_sel = sel;
  Rational best_score = score;

  while (true) {
    int pos = k - 1;
    while (pos >= 0 && sel[static_cast<size_t>(pos)] == m - k + pos) --pos;
    if (pos < 0) break;
    for (int j = pos; j < k; ++j) remove(sel[static_cast<size_t>(j)]);
    const int base = sel[static_cast<size_t>(pos)] + 1;
    for (int j = pos; j < k; ++j) {
      sel[static_cast<size_t>(j)] = base + (j - pos);
      add(sel[static_cast<size_t>(j)]);
    }
    // Strict improvement only: the first maximizer in lex order is kept.
    if (score > best_score) {
      best_score = score;
      best_sel = sel;
    }
  }

  IndexSet members(m);
  for (int c : best_sel) members.insert(c);
  Committee best(std::move(members));

  // Cross-check the incremental accounting against a from-scratch evaluation.
  if (pav_score(e, best) != best_score)
    throw std::logic_error("exact_pav: incremental score disagrees with full rescoring");
  return ExactPavResult{std::move(best), std::move(best_score)};
}

}  // namespace pavsel

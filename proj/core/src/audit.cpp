#include "pavsel/audit.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pavsel/exact_pav.hpp"
#include "pavsel/pav_score.hpp"

namespace pavsel {

int cohesive_threshold(int n, int k, int ell) {
  if (n < 1 || k < 1 || ell < 1) throw std::invalid_argument("cohesive_threshold: bad arguments");
  const long long num = static_cast<long long>(ell) * n;
  return static_cast<int>((num + k - 1) / k);
}

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

IndexSet all_voters(const Election& e) {
  IndexSet s(e.num_voters());
  for (int i = 0; i < e.num_voters(); ++i) s.insert(i);
  return s;
}

// Enumerates size-ell candidate sets T in lexicographic order together with
// the voters approving all of T. Subtrees whose joint approver set already
// falls below min_support are pruned; min_support is sound as a pruning bound
// because intersections only shrink. leaf returns false to stop early.
template <typename Leaf>
void enumerate_witnesses(const Election& e, int ell, int min_support, Leaf&& leaf) {
  const int m = e.num_candidates();
  std::vector<int> chosen;
  chosen.reserve(static_cast<size_t>(ell));
  auto rec = [&](auto&& self, int start, const IndexSet& support) -> bool {
    if (static_cast<int>(chosen.size()) == ell) return leaf(chosen, support);
    const int need = ell - static_cast<int>(chosen.size());
    for (int c = start; c + need <= m; ++c) {
      IndexSet next = support & e.approver_set(c);
      if (next.count() < min_support) continue;
      chosen.push_back(c);
      bool keep_going = self(self, c + 1, next);
      chosen.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  rec(rec, 0, all_voters(e));
}

IndexSet to_candidate_set(const Election& e, const std::vector<int>& candidates) {
  IndexSet s(e.num_candidates());
  for (int c : candidates) s.insert(c);
  return s;
}

std::uint64_t witness_budget_needed(const Election& e, int k, int ell_from, int ell_to) {
  std::uint64_t total = 0;
  for (int ell = ell_from; ell <= ell_to; ++ell) {
    if (cohesive_threshold(e.num_voters(), k, ell) > e.num_voters()) break;
    total = saturating_add(total, committee_count(e.num_candidates(), ell));
  }
  return total;
}

void check_witness_budget(std::uint64_t needed, const AuditBudget& budget) {
  if (needed > budget.max_candidate_sets)
    throw BudgetExceededError("audit: " + std::to_string(needed) +
                              " candidate sets to enumerate exceeds budget " +
                              std::to_string(budget.max_candidate_sets));
}

}  // namespace

std::pair<bool, std::optional<CohesiveGroupReport>> check_ejr(const Election& e,
                                                              const Committee& w,
                                                              const AuditBudget& budget) {
  require_valid(e, w);
  const int n = e.num_voters();
  const int k = w.size();
  check_witness_budget(witness_budget_needed(e, k, 1, k), budget);

  const SatisfactionVector sat = satisfaction(e, w);
  for (int ell = 1; ell <= k; ++ell) {
    const int t = cohesive_threshold(n, k, ell);
    if (t > n) break;  // thresholds only grow with ell
    std::optional<CohesiveGroupReport> violation;
    enumerate_witnesses(e, ell, t, [&](const std::vector<int>& witness, const IndexSet& support) {
      IndexSet unsatisfied(n);
      long long total_sat = 0;
      support.for_each([&](int i) {
        if (sat[static_cast<size_t>(i)] < ell) {
          unsatisfied.insert(i);
          total_sat += sat[static_cast<size_t>(i)];
        }
      });
      const int unsat_count = unsatisfied.count();
      if (unsat_count < t) return true;
      violation = CohesiveGroupReport{ell,
                                      to_candidate_set(e, witness),
                                      std::move(unsatisfied),
                                      unsat_count,
                                      Rational(total_sat, unsat_count),
                                      t};
      return false;
    });
    if (violation) return {false, std::move(violation)};
  }
  return {true, std::nullopt};
}

std::optional<CohesiveGroupReport> min_avg_satisfaction(const Election& e, const Committee& w,
                                                        int ell, const AuditBudget& budget) {
  require_valid(e, w);
  const int n = e.num_voters();
  const int k = w.size();
  if (ell < 1 || ell > k) throw std::invalid_argument("min_avg_satisfaction: ell out of range");
  const int t = cohesive_threshold(n, k, ell);
  if (t > n) return std::nullopt;
  check_witness_budget(committee_count(e.num_candidates(), ell), budget);

  const SatisfactionVector sat = satisfaction(e, w);
  std::optional<CohesiveGroupReport> best;
  std::vector<std::pair<int, int>> ranked;  // (satisfaction, voter), for the t worst-off
  enumerate_witnesses(e, ell, t, [&](const std::vector<int>& witness, const IndexSet& support) {
    // Within a fixed witness set the minimizing group is the t voters with the
    // smallest satisfaction; growing the group can only raise the average.
    // Sorting by (satisfaction, voter) also makes the reported group the
    // lexicographically smallest among the minimizers.
    ranked.clear();
    support.for_each([&](int i) { ranked.emplace_back(sat[static_cast<size_t>(i)], i); });
    std::sort(ranked.begin(), ranked.end());
    long long total = 0;
    IndexSet group(n);
    for (int j = 0; j < t; ++j) {
      total += ranked[static_cast<size_t>(j)].first;
      group.insert(ranked[static_cast<size_t>(j)].second);
    }
    Rational avg(total, t);
    if (!best || avg < best->avg_satisfaction)
      best = CohesiveGroupReport{ell, to_candidate_set(e, witness), std::move(group), t,
                                 std::move(avg), t};
    return true;
  });
  return best;
}

AuditReport audit(const Election& e, const Committee& w, const AuditBudget& budget) {
  require_valid(e, w);
  AuditReport report;
  report.committee_size = w.size();
  auto [holds, counterexample] = check_ejr(e, w, budget);
  report.ejr_holds = holds;
  report.ejr_counterexample = std::move(counterexample);
  for (int ell = 1; ell <= w.size(); ++ell)
    report.min_avg_satisfaction[ell] = min_avg_satisfaction(e, w, ell, budget);

  bool premise = true;
  for (const auto& [ell, group] : report.min_avg_satisfaction)
    if (group && group->avg_satisfaction <= ell - 1) premise = false;
  report.avg_implies_ejr = !premise || report.ejr_holds;
  return report;
}

std::optional<MaxMinAvgResult> max_min_avg_satisfaction(const Election& e, int k, int ell,
                                                        const OracleBudget& committee_budget,
                                                        const AuditBudget& audit_budget) {
  const int m = e.num_candidates();
  if (k < 1 || k > m)
    throw std::invalid_argument("max_min_avg_satisfaction: committee size out of range");
  if (ell < 1 || ell > k)
    throw std::invalid_argument("max_min_avg_satisfaction: ell out of range");
  const std::uint64_t combos = committee_count(m, k);
  if (combos > committee_budget.max_combinations)
    throw BudgetExceededError("max_min_avg_satisfaction: " + std::to_string(combos) +
                              " committees exceeds budget " +
                              std::to_string(committee_budget.max_combinations));

  std::optional<MaxMinAvgResult> best;
  std::vector<int> sel(static_cast<size_t>(k));
  std::iota(sel.begin(), sel.end(), 0);
  while (true) {
    Committee w(to_candidate_set(e, sel));
    auto worst = min_avg_satisfaction(e, w, ell, audit_budget);
    // Group existence does not depend on the committee, only its size; if the
    // first committee has no ell-cohesive group, none has.
    if (!worst) return std::nullopt;
    if (!best || worst->avg_satisfaction > best->worst_group.avg_satisfaction)
      best = MaxMinAvgResult{std::move(w), std::move(*worst)};

    int pos = k - 1;
    while (pos >= 0 && sel[static_cast<size_t>(pos)] == m - k + pos) --pos;
    if (pos < 0) break;
    const int base = sel[static_cast<size_t>(pos)] + 1;
    for (int j = pos; j < k; ++j) sel[static_cast<size_t>(j)] = base + (j - pos);
  }
  return best;
}

}  // namespace pavsel

#pragma once

#include <map>
#include <optional>

#include "pavsel/budget.hpp"
#include "pavsel/election.hpp"
#include "pavsel/rational.hpp"

namespace pavsel {

// A group of voters counted against committee w. The group jointly approves
// every candidate in witness_candidates (|witness_candidates| = ell) and is
// large enough to deserve ell seats: group_size >= threshold_size where
// threshold_size = ceil(ell * n / k).
struct CohesiveGroupReport {
  int ell = 0;
  IndexSet witness_candidates;  // over candidates
  IndexSet group_voters;        // over voters
  int group_size = 0;
  Rational avg_satisfaction;    // mean of |A_i intersect W| over the group
  int threshold_size = 0;
};

struct AuditReport {
  int committee_size = 0;
  bool ejr_holds = false;
  std::optional<CohesiveGroupReport> ejr_counterexample;
  // One entry per ell in 1..k; nullopt where no ell-cohesive group exists.
  std::map<int, std::optional<CohesiveGroupReport>> min_avg_satisfaction;
  // Consistency flag: whenever every group size with any cohesive group has
  // minimum average satisfaction > ell - 1, the committee must satisfy the
  // seat guarantee below. Always true unless the audit itself is broken.
  bool avg_implies_ejr = false;
};

// ceil(ell * n / k): the voter count that entitles a group to ell seats.
int cohesive_threshold(int n, int k, int ell);

// Seat guarantee check: w fails iff some ell and some ell-cohesive group
// consist entirely of voters with fewer than ell approved committee members.
// Returns the first violation found (smallest ell, then lexicographically
// smallest witness candidate set); the reported group is every approver of
// the witness set that has satisfaction below ell.
std::pair<bool, std::optional<CohesiveGroupReport>> check_ejr(
    const Election& e, const Committee& w, const AuditBudget& budget = {});

// Worst-off ell-cohesive group by average satisfaction; nullopt when none
// exists. Ties resolve to the lexicographically smallest witness set, then
// the lexicographically smallest voter set.
std::optional<CohesiveGroupReport> min_avg_satisfaction(const Election& e, const Committee& w,
                                                        int ell,
                                                        const AuditBudget& budget = {});

// Full audit: seat guarantee plus the per-ell minimum averages.
AuditReport audit(const Election& e, const Committee& w, const AuditBudget& budget = {});

// Exhaustive over committees: the size-k committee maximizing the minimum
// average satisfaction of ell-cohesive groups, with that committee's worst
// group. nullopt when the profile has no ell-cohesive group at size k.
struct MaxMinAvgResult {
  Committee committee;
  CohesiveGroupReport worst_group;
};
std::optional<MaxMinAvgResult> max_min_avg_satisfaction(const Election& e, int k, int ell,
                                                        const OracleBudget& committee_budget = {},
                                                        const AuditBudget& audit_budget = {});

}  // namespace pavsel

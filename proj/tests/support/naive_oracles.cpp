#include "support/naive_oracles.hpp"

#include <bit>
#include <stdexcept>

#include "pavsel/audit.hpp"

namespace pavsel::testing {

Rational naive_pav_score(const Election& e, const Committee& w) {
  Rational total(0);
  for (int i = 0; i < e.num_voters(); ++i) {
    const int t = intersection_count(e.ballot(i), w.members());
    for (int j = 1; j <= t; ++j) total += Rational(1, j);
  }
  return total;
}

NaiveAuditResult naive_audit(const Election& e, const Committee& w) {
  const int n = e.num_voters();
  const int k = w.size();
  if (n > 20) throw std::invalid_argument("naive_audit: too many voters");

  NaiveAuditResult result;
  result.ejr_holds = true;
  for (int ell = 1; ell <= k; ++ell) result.min_avg[ell] = std::nullopt;

  const SatisfactionVector sat = satisfaction(e, w);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    IndexSet common(e.num_candidates());
    for (int c = 0; c < e.num_candidates(); ++c) common.insert(c);
    long long sat_sum = 0;
    int max_sat = 0;
    const int size = std::popcount(mask);
    for (int i = 0; i < n; ++i) {
      if (!((mask >> i) & 1)) continue;
      common.intersect_with(e.ballot(i));
      sat_sum += sat[static_cast<size_t>(i)];
      max_sat = std::max(max_sat, sat[static_cast<size_t>(i)]);
    }
    const int joint = common.count();
    for (int ell = 1; ell <= std::min(joint, k); ++ell) {
      if (size < cohesive_threshold(n, k, ell)) continue;
      Rational avg(sat_sum, size);
      auto& slot = result.min_avg[ell];
      if (!slot || avg < *slot) slot = avg;
      if (max_sat < ell) result.ejr_holds = false;
    }
  }
  return result;
}

ExactPavResult naive_exact_pav(const Election& e, int k) {
  const int m = e.num_candidates();
  if (k < 1 || k > m) throw std::invalid_argument("naive_exact_pav: bad k");

  std::optional<Committee> best;
  Rational best_score(0);
  std::vector<int> sel;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(sel.size()) == k) {
      IndexSet members(m);
      for (int c : sel) members.insert(c);
      Committee w(std::move(members));
      Rational score = naive_pav_score(e, w);
      if (!best || score > best_score) {
        best = std::move(w);
        best_score = std::move(score);
      }
      return;
    }
    for (int c = start; c + (k - static_cast<int>(sel.size())) <= m; ++c) {
      sel.push_back(c);
      self(self, c + 1);
      sel.pop_back();
    }
  };
  rec(rec, 0);
  return ExactPavResult{std::move(*best), std::move(best_score)};
}

}  // namespace pavsel::testing

#include "pavsel/pav_score.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace pavsel {

Rational harmonic(int t) {
  if (t < 0) throw std::invalid_argument("harmonic: negative argument");
  static std::mutex mu;
  static std::vector<Rational> table = {Rational(0)};
  std::lock_guard lock(mu);
  while (static_cast<int>(table.size()) <= t)
    table.push_back(table.back() + Rational(1, static_cast<long long>(table.size())));
  return table[static_cast<size_t>(t)];
}

Rational pav_score(const Election& e, const Committee& w) {
  SatisfactionVector sat = satisfaction(e, w);
  // Voters with equal satisfaction are tallied together so the number of
  // rational additions is bounded by k, not n.
  std::vector<long long> tally(static_cast<size_t>(w.size()) + 1, 0);
  for (int s : sat) ++tally[static_cast<size_t>(s)];
  Rational total(0);
  for (int t = 1; t <= w.size(); ++t)
    if (tally[static_cast<size_t>(t)] != 0)
      total += harmonic(t) * tally[static_cast<size_t>(t)];
  return total;
}

Rational swap_delta(const Election& e, const Committee& w, const SatisfactionVector& sat,
                    int out_candidate, int in_candidate) {
  require_valid(e, w);
  if (!w.contains(out_candidate))
    throw std::invalid_argument("swap_delta: out candidate not in committee");
  if (w.contains(in_candidate))
    throw std::invalid_argument("swap_delta: in candidate already in committee");
  if (static_cast<int>(sat.size()) != e.num_voters())
    throw std::invalid_argument("swap_delta: satisfaction vector size mismatch");

  const int k = w.size();
  // gains[t]: voters at satisfaction t who approve in but not out; each moves
  // to t+1 and contributes 1/(t+1). losses[t]: voters at t approving out but
  // not in; each drops to t-1 and loses 1/t.
  std::vector<long long> gains(static_cast<size_t>(k) + 1, 0);
  std::vector<long long> losses(static_cast<size_t>(k) + 1, 0);
  for (int i : e.approvers(in_candidate))
    if (!e.ballot(i).contains(out_candidate)) ++gains[static_cast<size_t>(sat[static_cast<size_t>(i)])];
  for (int i : e.approvers(out_candidate))
    if (!e.ballot(i).contains(in_candidate)) ++losses[static_cast<size_t>(sat[static_cast<size_t>(i)])];

  Rational delta(0);
  for (int t = 0; t <= k; ++t)
    if (gains[static_cast<size_t>(t)] != 0)
      delta += Rational(gains[static_cast<size_t>(t)], t + 1);
  for (int t = 1; t <= k; ++t)
    if (losses[static_cast<size_t>(t)] != 0)
      delta -= Rational(losses[static_cast<size_t>(t)], t);
  return delta;
}

Rational swap_delta(const Election& e, const Committee& w, int out_candidate,
                    int in_candidate) {
  return swap_delta(e, w, satisfaction(e, w), out_candidate, in_candidate);
}

}  // namespace pavsel

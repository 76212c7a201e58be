#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pavsel/election.hpp"
#include "pavsel/rational.hpp"

namespace pavsel {

enum class InitStrategy {
  kApprovalTopK,   // k highest approval counts, ties by candidate index
  kFirstK,         // candidates 0..k-1
  kSeededRandom,   // uniform k-subset from the configured seed
};

enum class PivotRule {
  kBestImprovement,   // largest qualifying delta, ties by (in, out) index
  kFirstImprovement,  // first qualifying delta in (in, out) index order
};

struct LsPavConfig {
  InitStrategy init = InitStrategy::kApprovalTopK;
  PivotRule pivot = PivotRule::kBestImprovement;
  std::optional<std::uint64_t> seed;       // required for kSeededRandom
  std::optional<int> max_swaps_override;   // stop early; intended for tests
};

struct SwapRecord {
  int out_candidate = 0;
  int in_candidate = 0;
  Rational delta;        // always >= n/k^2
  Rational score_after;  // exact score once the swap is applied
};

struct LsPavTrace {
  Committee initial_committee;
  Rational initial_score;
  std::vector<SwapRecord> swaps;
  Committee final_committee;
};

struct LsPavResult {
  Committee committee;
  Rational score;
  LsPavTrace trace;
};

// The k candidates with the highest approval counts, ties by candidate index.
// This is both a rule in its own right and the default ls_pav start.
Committee approval_top_k(const Election& e, int k);

// Minimum score gain a swap must reach to be accepted: n/k^2.
Rational improvement_threshold(const Election& e, int k);

// No run can accept more swaps than this: each accepted swap gains at least
// n/k^2 and the score never exceeds n*H(k), so ceil(k^2 * H(k)) caps the
// count.
long long swap_count_bound(int k);

// Local search over single-candidate swaps: starting from the configured
// initial committee, repeatedly apply a swap whose exact score gain is at
// least n/k^2 until none exists. Deterministic for a fixed config.
LsPavResult ls_pav(const Election& e, int k, const LsPavConfig& config = {});

// True iff no single swap from w gains at least n/k^2, i.e. w is a possible
// ls_pav output.
bool local_optimality_certificate(const Election& e, const Committee& w);

}  // namespace pavsel

#include "pavsel/lspav.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "pavsel/pav_score.hpp"

namespace pavsel {

namespace {

// Bounded draw from the engine's full 64-bit output. The modulo bias is
// irrelevant here but the construction must stay fixed forever: generated
// profiles and seeded runs are reproducible artifacts.
std::uint64_t bounded(std::mt19937_64& engine, std::uint64_t bound) {
  return engine() % bound;
}

Committee initial_committee(const Election& e, int k, const LsPavConfig& config) {
  const int m = e.num_candidates();
  IndexSet members(m);
  switch (config.init) {
    case InitStrategy::kApprovalTopK:
      return approval_top_k(e, k);
    case InitStrategy::kFirstK:
      for (int c = 0; c < k; ++c) members.insert(c);
      break;
    case InitStrategy::kSeededRandom: {
      if (!config.seed)
        throw std::invalid_argument("ls_pav: seeded-random init requires a seed");
      std::mt19937_64 engine(*config.seed);
      std::vector<int> pool(static_cast<size_t>(m));
      std::iota(pool.begin(), pool.end(), 0);
      for (int j = 0; j < k; ++j) {
        auto pick = static_cast<size_t>(j) +
                    static_cast<size_t>(bounded(engine, static_cast<std::uint64_t>(m - j)));
        std::swap(pool[static_cast<size_t>(j)], pool[pick]);
        members.insert(pool[static_cast<size_t>(j)]);
      }
      break;
    }
  }
  return Committee(std::move(members));
}

struct PickedSwap {
  int out_candidate;
  int in_candidate;
  Rational delta;
};

std::optional<PickedSwap> pick_swap(const Election& e, const Committee& w,
                                    const SatisfactionVector& sat, const Rational& threshold,
                                    PivotRule pivot) {
  std::optional<PickedSwap> best;
  for (int in = 0; in < e.num_candidates(); ++in) {
    if (w.contains(in)) continue;
    for (int out : w.indices()) {
      Rational delta = swap_delta(e, w, sat, out, in);
      if (delta < threshold) continue;
      if (pivot == PivotRule::kFirstImprovement) return PickedSwap{out, in, std::move(delta)};
      if (!best || delta > best->delta) best = PickedSwap{out, in, std::move(delta)};
    }
  }
  return best;
}

}  // namespace

Committee approval_top_k(const Election& e, int k) {
  const int m = e.num_candidates();
  if (k < 1 || k > m) throw std::invalid_argument("approval_top_k: committee size out of range");
  std::vector<int> order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&e](int a, int b) {
    if (e.approval_count(a) != e.approval_count(b))
      return e.approval_count(a) > e.approval_count(b);
    return a < b;
  });
  IndexSet members(m);
  for (int i = 0; i < k; ++i) members.insert(order[static_cast<size_t>(i)]);
  return Committee(std::move(members));
}

Rational improvement_threshold(const Election& e, int k) {
  if (k < 1 || k > e.num_candidates())
    throw std::invalid_argument("improvement_threshold: committee size out of range");
  return Rational(e.num_voters(), static_cast<long long>(k) * k);
}

long long swap_count_bound(int k) {
  return ceil_rational(Rational(static_cast<long long>(k) * k) * harmonic(k))
      .convert_to<long long>();
}

LsPavResult ls_pav(const Election& e, int k, const LsPavConfig& config) {
  if (k < 1 || k > e.num_candidates())
    throw std::invalid_argument("ls_pav: committee size out of range");

  const Rational threshold = improvement_threshold(e, k);
  Committee w = initial_committee(e, k, config);
  SatisfactionVector sat = satisfaction(e, w);
  Rational score = pav_score(e, w);

  LsPavTrace trace{w, score, {}, w};
  while (true) {
    if (config.max_swaps_override &&
        static_cast<int>(trace.swaps.size()) >= *config.max_swaps_override)
      break;
    auto swap = pick_swap(e, w, sat, threshold, config.pivot);
    if (!swap) break;

    for (int i : e.approvers(swap->out_candidate)) --sat[static_cast<size_t>(i)];
    for (int i : e.approvers(swap->in_candidate)) ++sat[static_cast<size_t>(i)];
    w = w.with_swap(swap->out_candidate, swap->in_candidate);
    score += swap->delta;
    trace.swaps.push_back({swap->out_candidate, swap->in_candidate, swap->delta, score});

    if (static_cast<long long>(trace.swaps.size()) > swap_count_bound(k))
      throw std::logic_error("ls_pav: swap count exceeded ceil(k^2*H(k)); delta accounting broken");
  }

  trace.final_committee = w;
  return LsPavResult{w, std::move(score), std::move(trace)};
}

bool local_optimality_certificate(const Election& e, const Committee& w) {
  require_valid(e, w);
  const Rational threshold = improvement_threshold(e, w.size());
  SatisfactionVector sat = satisfaction(e, w);
  return !pick_swap(e, w, sat, threshold, PivotRule::kFirstImprovement).has_value();
}

}  // namespace pavsel

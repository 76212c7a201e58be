#include <doctest.h>

#include <stdexcept>

#include "pavsel/exact_pav.hpp"
#include "pavsel/lspav.hpp"
#include "pavsel/pav_score.hpp"
#include "pavsel/profile_io.hpp"
#include "support/fixtures.hpp"
#include "support/instance_gen.hpp"

using namespace pavsel;
using namespace pavsel::testing;

namespace {

// Candidate order c d a b, so first-k starts on the never-approved pair and
// the search has real work to do.
const char* kShuffledTwoCamps = "candidates: c d a b\nk: 2\n2: a\n2: b\n";

void check_trace_invariants(const Election& e, int k, const LsPavResult& r) {
  const Rational threshold = improvement_threshold(e, k);
  Rational score = r.trace.initial_score;
  Committee w = r.trace.initial_committee;
  for (const SwapRecord& s : r.trace.swaps) {
    CHECK(s.delta >= threshold);
    w = w.with_swap(s.out_candidate, s.in_candidate);
    score += s.delta;
    CHECK(s.score_after == score);
    CHECK(s.score_after == pav_score(e, w));
  }
  CHECK(w == r.committee);
  CHECK(r.trace.final_committee == r.committee);
  CHECK(r.score == pav_score(e, r.committee));
  CHECK(static_cast<long long>(r.trace.swaps.size()) <= swap_count_bound(k));
}

}  // namespace

TEST_CASE("improvement threshold and swap bound") {
  CHECK(improvement_threshold(rectangle_election(), 3) == Rational(4, 3));
  CHECK(swap_count_bound(1) == 1);
  CHECK(swap_count_bound(2) == 6);
  CHECK(swap_count_bound(3) == ceil_rational(Rational(9) * Rational(11, 6)).convert_to<long long>());
}

TEST_CASE("approval_top_k picks by count with index ties") {
  const Election e = parse_election("candidates: a b c d\n1: b\n1: b\n1: c\n1: d\n");
  CHECK(approval_top_k(e, 2) == Committee::of(4, {1, 2}));  // b twice, then c over d
  CHECK(approval_top_k(e, 3) == Committee::of(4, {1, 2, 3}));
}

TEST_CASE("k equal to m returns the full candidate set with no swaps") {
  const Election e = parse_election("candidates: a b\n1: a\n");
  const LsPavResult r = ls_pav(e, 2);
  CHECK(r.committee == Committee::of(2, {0, 1}));
  CHECK(r.trace.swaps.empty());
}

TEST_CASE("rectangle stops immediately: every 3-subset is a local optimum") {
  const Election e = rectangle_election();
  const LsPavResult r = ls_pav(e, 3);
  CHECK(r.trace.swaps.empty());
  CHECK(r.score == Rational(11));
  CHECK(local_optimality_certificate(e, r.committee));
  // All four 3-subsets certify, not just the returned one.
  for (int skip = 0; skip < 4; ++skip) {
    IndexSet members(4);
    for (int c = 0; c < 4; ++c)
      if (c != skip) members.insert(c);
    CHECK(local_optimality_certificate(e, Committee(members)));
  }
}

TEST_CASE("search escapes a bad start and the trace records it") {
  const Election e = parse_election(kShuffledTwoCamps);
  LsPavConfig config;
  config.init = InitStrategy::kFirstK;
  const LsPavResult r = ls_pav(e, 2, config);
  CHECK(r.committee == Committee::of(4, {2, 3}));  // {a, b}
  CHECK(r.trace.swaps.size() == 2);
  CHECK(r.trace.initial_score == Rational(0));
  CHECK(r.score == Rational(4));
  // Best-improvement tie-break: lowest in-candidate, then lowest out-candidate.
  CHECK(r.trace.swaps[0].in_candidate == 2);
  CHECK(r.trace.swaps[0].out_candidate == 0);
  CHECK(r.trace.swaps[0].delta == Rational(2));
  check_trace_invariants(e, 2, r);
  CHECK(local_optimality_certificate(e, r.committee));
}

TEST_CASE("first-improvement reaches a certificate too") {
  const Election e = parse_election(kShuffledTwoCamps);
  LsPavConfig config;
  config.init = InitStrategy::kFirstK;
  config.pivot = PivotRule::kFirstImprovement;
  const LsPavResult r = ls_pav(e, 2, config);
  check_trace_invariants(e, 2, r);
  CHECK(local_optimality_certificate(e, r.committee));
  CHECK(r.committee == Committee::of(4, {2, 3}));
}

TEST_CASE("max_swaps_override stops early and leaves no certificate") {
  const Election e = parse_election(kShuffledTwoCamps);
  LsPavConfig config;
  config.init = InitStrategy::kFirstK;
  config.max_swaps_override = 1;
  const LsPavResult r = ls_pav(e, 2, config);
  CHECK(r.trace.swaps.size() == 1);
  CHECK(!local_optimality_certificate(e, r.committee));
}

TEST_CASE("seeded-random init is reproducible and requires a seed") {
  const Election e = rectangle_election();
  LsPavConfig config;
  config.init = InitStrategy::kSeededRandom;
  CHECK_THROWS_AS(ls_pav(e, 3, config), std::invalid_argument);
  config.seed = 99;
  const LsPavResult a = ls_pav(e, 3, config);
  const LsPavResult b = ls_pav(e, 3, config);
  CHECK(a.committee == b.committee);
  CHECK(a.trace.initial_committee == b.trace.initial_committee);
  CHECK(a.trace.swaps.size() == b.trace.swaps.size());
}

TEST_CASE("undoing one optimal swap breaks the certificate") {
  const Election e = two_camps_election();
  // {a, c} is one swap away from the optimum {a, b}: bringing b in for c
  // gains 2 >= n/k^2 = 1.
  CHECK(!local_optimality_certificate(e, Committee::of(4, {0, 2})));
  CHECK(swap_delta(e, Committee::of(4, {0, 2}), 2, 1) == Rational(2));
}

TEST_CASE("runs are deterministic and always certify") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto [e, k] = random_instance(i);
    for (const InitStrategy init : {InitStrategy::kApprovalTopK, InitStrategy::kFirstK}) {
      LsPavConfig config;
      config.init = init;
      const LsPavResult r = ls_pav(e, k, config);
      check_trace_invariants(e, k, r);
      CHECK(local_optimality_certificate(e, r.committee));

      const LsPavResult again = ls_pav(e, k, config);
      CHECK(again.committee == r.committee);
      REQUIRE(again.trace.swaps.size() == r.trace.swaps.size());
      for (size_t s = 0; s < r.trace.swaps.size(); ++s) {
        CHECK(again.trace.swaps[s].out_candidate == r.trace.swaps[s].out_candidate);
        CHECK(again.trace.swaps[s].in_candidate == r.trace.swaps[s].in_candidate);
        CHECK(again.trace.swaps[s].delta == r.trace.swaps[s].delta);
      }
    }
  }
}

TEST_CASE("committee size is validated") {
  CHECK_THROWS_AS(ls_pav(rectangle_election(), 0), std::invalid_argument);
  CHECK_THROWS_AS(ls_pav(rectangle_election(), 5), std::invalid_argument);
  CHECK_THROWS_AS(improvement_threshold(rectangle_election(), 0), std::invalid_argument);
}

#include <benchmark/benchmark.h>

#include <cstdint>

#include "pavsel/audit.hpp"
#include "pavsel/exact_pav.hpp"
#include "pavsel/lspav.hpp"
#include "pavsel/pav_score.hpp"
#include "pavsel/profile_gen.hpp"

using namespace pavsel;

namespace {

Election dense_profile(int n, int m, std::uint64_t seed) {
  RandomProfileParams params;
  params.num_voters = n;
  params.num_candidates = m;
  params.ballot_model = UniformApprovalModel{3, 10};
  params.seed = seed;
  return gen_random(params);
}

void BM_PavScore(benchmark::State& state) {
  const Election e = dense_profile(500, 50, 1);
  const Committee w = approval_top_k(e, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pav_score(e, w));
  }
}
BENCHMARK(BM_PavScore)->Arg(5)->Arg(10)->Arg(20);

void BM_SwapDelta(benchmark::State& state) {
  const Election e = dense_profile(500, 50, 1);
  const Committee w = approval_top_k(e, 10);
  const SatisfactionVector sat = satisfaction(e, w);
  const int out = w.indices().front();
  int in = 0;
  while (w.contains(in)) ++in;
  for (auto _ : state) {
    benchmark::DoNotOptimize(swap_delta(e, w, sat, out, in));
  }
}
BENCHMARK(BM_SwapDelta);

void BM_LsPav(benchmark::State& state) {
  const Election e = dense_profile(200, 30, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ls_pav(e, 8));
  }
}
BENCHMARK(BM_LsPav);

void BM_ExactPav(benchmark::State& state) {
  const Election e = dense_profile(20, 14, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_pav(e, 7));  // 3432 committees
  }
}
BENCHMARK(BM_ExactPav);

void BM_Audit(benchmark::State& state) {
  const Election e = gen_cycle(8);
  const Committee w = approval_top_k(e, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(audit(e, w));
  }
}
BENCHMARK(BM_Audit);

}  // namespace

BENCHMARK_MAIN();

#include "pavsel/profile_gen.hpp"

#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "pavsel/audit.hpp"

namespace pavsel {

namespace {

std::string default_cycle_name(int index, int count) {
  if (count <= 26) return std::string(1, static_cast<char>('a' + index));
  return "c" + std::to_string(index + 1);
}

// See lspav.cpp: the draw construction is frozen because generated profiles
// are reproducible artifacts.
std::uint64_t bounded(std::mt19937_64& engine, std::uint64_t bound) {
  return engine() % bound;
}

}  // namespace

Election gen_cycle(int k) {
  if (k < 2) throw std::invalid_argument("gen_cycle: k must be at least 2");
  const int m = k + 1;
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(m));
  for (int c = 0; c < m; ++c) names.push_back(default_cycle_name(c, m));

  std::vector<IndexSet> ballots;
  ballots.reserve(static_cast<size_t>(m) * static_cast<size_t>(k));
  for (int c = 0; c < m; ++c) {
    const int prev = (c + m - 1) % m;
    ballots.push_back(IndexSet::of(m, {prev, c}));
    for (int r = 0; r < k - 1; ++r) ballots.push_back(IndexSet::of(m, {c}));
  }
  return Election(m, std::move(ballots), std::move(names), k);
}

Rational cycle_tightness(int k) {
  const Election e = gen_cycle(k);
  auto best = max_min_avg_satisfaction(e, k, 1);
  // The cycle always has 1-cohesive groups (every candidate clears n/k).
  if (!best) throw std::logic_error("cycle_tightness: cycle profile lost its cohesive groups");
  return best->worst_group.avg_satisfaction;
}

Election replicate(const Election& base, const ReplicationParams& params) {
  const int ell = params.ell;
  if (ell < 1) throw std::invalid_argument("replicate: ell must be positive");
  const int m = base.num_candidates();
  if (m > (std::numeric_limits<int>::max)() / ell)
    throw std::invalid_argument("replicate: candidate count overflow");
  const int replicated_m = m * ell;

  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(replicated_m));
  for (int c = 0; c < m; ++c)
    for (int copy = 1; copy <= ell; ++copy)
      names.push_back(base.candidate_name(c) + "_" + std::to_string(copy));

  std::vector<IndexSet> ballots;
  ballots.reserve(static_cast<size_t>(base.num_voters()));
  for (int i = 0; i < base.num_voters(); ++i) {
    IndexSet ballot(replicated_m);
    base.ballot(i).for_each([&](int c) {
      for (int copy = 0; copy < ell; ++copy) ballot.insert(c * ell + copy);
    });
    ballots.push_back(std::move(ballot));
  }
  return Election(replicated_m, std::move(ballots), std::move(names), params.committee_size);
}

Election gen_random(const RandomProfileParams& params) {
  const int n = params.num_voters;
  const int m = params.num_candidates;
  if (n < 1) throw std::invalid_argument("gen_random: need at least one voter");
  if (m < 1) throw std::invalid_argument("gen_random: need at least one candidate");
  if (params.committee_size && (*params.committee_size < 1 || *params.committee_size > m))
    throw std::invalid_argument("gen_random: committee size out of range");
  if (const auto* uniform = std::get_if<UniformApprovalModel>(&params.ballot_model)) {
    if (uniform->den == 0 || uniform->num == 0 || uniform->num > uniform->den)
      throw std::invalid_argument("gen_random: approval probability must be in (0, 1]");
  } else {
    const auto& fixed = std::get<FixedSizeBallotModel>(params.ballot_model);
    if (fixed.ballot_size < 0 || fixed.ballot_size > m)
      throw std::invalid_argument("gen_random: ballot size out of range");
  }

  std::mt19937_64 engine(params.seed);
  std::vector<IndexSet> ballots;
  ballots.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    IndexSet ballot(m);
    if (const auto* uniform = std::get_if<UniformApprovalModel>(&params.ballot_model)) {
      for (int c = 0; c < m; ++c)
        if (bounded(engine, uniform->den) < uniform->num) ballot.insert(c);
    } else {
      const int s = std::get<FixedSizeBallotModel>(params.ballot_model).ballot_size;
      std::vector<int> pool(static_cast<size_t>(m));
      std::iota(pool.begin(), pool.end(), 0);
      for (int j = 0; j < s; ++j) {
        auto pick = static_cast<size_t>(j) +
                    static_cast<size_t>(bounded(engine, static_cast<std::uint64_t>(m - j)));
        std::swap(pool[static_cast<size_t>(j)], pool[pick]);
        ballot.insert(pool[static_cast<size_t>(j)]);
      }
    }
    ballots.push_back(std::move(ballot));
  }
  return Election(m, std::move(ballots), {}, params.committee_size);
}

}  // namespace pavsel

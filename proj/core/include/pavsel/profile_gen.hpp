#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "pavsel/election.hpp"
#include "pavsel/rational.hpp"

namespace pavsel {

// Cycle profile over m = k + 1 candidates arranged in a ring: for each
// candidate, one voter approving it together with its ring predecessor plus
// k - 1 voters approving it alone. n = k * (k + 1) voters; every candidate is
// approved by exactly k + 1 = n/k voters, so every singleton group is
// 1-cohesive. k = 3 is the four-candidate instance, k = 4 the five-candidate
// one. Requires k >= 2. Candidates are named a, b, c, ... (c1, c2, ... once
// past 26) and the profile carries k as its default committee size.
Election gen_cycle(int k);

// Best achievable minimum average satisfaction of 1-cohesive groups on
// gen_cycle(k), over all size-k committees, by exhaustive enumeration.
Rational cycle_tightness(int k);

struct ReplicationParams {
  int ell = 1;                        // copies per candidate
  std::optional<Rational> gamma;      // carried for report context only
  std::optional<int> committee_size;  // default committee size of the output
};

// Each candidate x becomes ell copies x_1..x_ell and each ballot approves all
// copies of what it approved. Voter count and order are unchanged.
Election replicate(const Election& base, const ReplicationParams& params);

struct UniformApprovalModel {
  // Each (voter, candidate) pair approves independently with probability
  // num/den; 0 < num <= den.
  std::uint64_t num = 1;
  std::uint64_t den = 2;
};

struct FixedSizeBallotModel {
  int ballot_size = 0;  // every voter approves a uniform subset of this size
};

struct RandomProfileParams {
  int num_voters = 0;
  int num_candidates = 0;
  std::optional<int> committee_size;  // recorded as the profile's default k
  std::variant<UniformApprovalModel, FixedSizeBallotModel> ballot_model;
  std::uint64_t seed = 0;
};

// Deterministic function of its parameters: same params, same election,
// byte-identical serialization, on every platform.
Election gen_random(const RandomProfileParams& params);

}  // namespace pavsel

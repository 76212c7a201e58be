#pragma once

#include <cstdint>

#include "pavsel/election.hpp"
#include "pavsel/profile_gen.hpp"

namespace pavsel::testing {

struct RandomInstance {
  Election election;
  int k;
};

// Deterministic family of small instances for property suites: the same index
// always yields the same instance, even-indexed instances use the uniform
// approval model and odd-indexed ones the fixed ballot size model.
RandomInstance random_instance(std::uint64_t index, int max_n = 12, int max_m = 8,
                               int max_k = 5);

// Uniform committee of the given size, deterministic in salt.
Committee random_committee(const Election& e, int k, std::uint64_t salt);

}  // namespace pavsel::testing

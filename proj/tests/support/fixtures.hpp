#pragma once

#include "pavsel/profile_io.hpp"

namespace pavsel::testing {

// Four candidates on a ring, k = 3: per candidate one voter pairing it with
// its predecessor plus two singletons. Every candidate has exactly four
// approvers, n/k = 4.
inline constexpr const char* kRectangleProfile = R"(# four candidates on a ring
candidates: a b c d
k: 3

1: d a
2: a
1: a b
2: b
1: b c
2: c
1: c d
2: d
)";

// Two camps of two voters, two never-approved candidates. Auditing {c, d}
// against k = 2 must fail: the a-voters are 1-cohesive and fully ignored.
inline constexpr const char* kTwoCampsProfile = R"(candidates: a b c d
k: 2
2: a
2: b
)";

inline Election rectangle_election() { return parse_election(kRectangleProfile); }
inline Election two_camps_election() { return parse_election(kTwoCampsProfile); }

}  // namespace pavsel::testing

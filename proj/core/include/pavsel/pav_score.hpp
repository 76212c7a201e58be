#pragma once

#include "pavsel/election.hpp"
#include "pavsel/rational.hpp"

namespace pavsel {

// H(t) = 1 + 1/2 + ... + 1/t, with H(0) = 0. Exact; memoized internally.
Rational harmonic(int t);

// Sum over voters of H(|A_i intersect W|).
Rational pav_score(const Election& e, const Committee& w);

// Exact score change of replacing out_candidate (a member) with in_candidate
// (a non-member): pav_score(W - out + in) - pav_score(W). The overload taking
// a precomputed satisfaction vector runs in O(deg(out) + deg(in)); the
// convenience overload computes the vector itself.
Rational swap_delta(const Election& e, const Committee& w, const SatisfactionVector& sat,
                    int out_candidate, int in_candidate);
Rational swap_delta(const Election& e, const Committee& w, int out_candidate,
                    int in_candidate);

}  // namespace pavsel

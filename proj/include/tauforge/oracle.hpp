#pragma once

#include "tauforge/partition.hpp"
#include "tauforge/rational.hpp"

namespace tauforge {

// Brute-force count of transitive transposition factorizations:
// (1/d!) * #{(sigma, tau_1..tau_r) : sigma has cycle type mu, each tau_i
// a transposition in S_d, tau_r...tau_1 sigma = id, and <sigma, tau_i>
// acts transitively on {1..d}}, with r the branch count of (genus, mu).
// Entirely independent of the cut-and-join recursion.
//
// Requires |mu| <= 6 and r <= rmax_bound; otherwise throws
// domain_error("oracle out of range").
Rational hurwitz_oracle(int genus, const Partition& mu, int rmax_bound = 10);

// Internal strategies, exposed so tests can cross-check them against
// each other where both apply.

// Joint DP over (running product, orbit partition of {1..d}); intended
// for d <= 5.
Rational hurwitz_oracle_direct(int genus, const Partition& mu);

// Class-function DP for the factorization counts plus inclusion-
// exclusion over block-size profiles for transitivity; handles d <= 6
// comfortably.
Rational hurwitz_oracle_blockwise(int genus, const Partition& mu);

}  // namespace tauforge

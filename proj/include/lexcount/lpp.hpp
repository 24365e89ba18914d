#pragma once

#include <vector>

#include <gmpxx.h>

#include "lexcount/biword.hpp"

namespace lexcount {

struct LatticePoint {
    int i = 0;
    int j = 0;
    bool operator==(const LatticePoint&) const = default;
};

/* A weakly-up/weakly-right sequence of distinct lattice points. */
struct PathChain {
    std::vector<LatticePoint> points;

    bool operator==(const PathChain&) const = default;
};

/*
 * Maximum over weakly monotone chains from (1,1) to (m,m) of the sum of
 * entries on the chain, by the usual corner dynamic program. With
 * nonnegative entries the step-path maximum equals the chain maximum
 * (any chain extends to a full path without losing weight); that
 * equivalence is oracle-tested rather than assumed.
 */
long long last_passage_time(const PlanarArray& x);

/*
 * A chain achieving last_passage_time(x), reconstructed by walking the
 * DP table back from (m,m); on ties the left predecessor (i, j-1) is
 * taken, which places the vertical moves as early as possible.
 */
PathChain chain_certificate(const PlanarArray& x);

/*
 * Number of m-by-m nonnegative integer matrices whose last passage time
 * is at most n. Depth-first search in row-major order; a branch dies as
 * soon as the partial DP value at the cell just placed exceeds n (every
 * such value is a lower bound for the final time, and in particular
 * each entry is individually capped by n). `threads` > 1 splits the
 * search by first-row assignment; counts add in task order.
 */
mpz_class count_matrices(int m, int n, unsigned threads = 1);

} // namespace lexcount

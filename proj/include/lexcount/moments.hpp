#pragma once

#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lexcount {

/* Moment order m (alphabet size) and matrix dimension n (subsequence bound). */
struct MomentQuery {
    int m = 0;
    int n = 0;
};

/*
 * The CUE moment as a ratio of factorial products, reduced so that the
 * cost is O(m^2) multiplications independent of n: after telescoping
 * the product over j, the value is
 *
 *     prod_{i=0}^{m-1} prod_{t=1}^{m} (n+i+t) / (i+t)
 *
 * accumulated as one exact numerator and denominator; the final
 * division must leave no remainder (std::logic_error otherwise).
 * n = 0 or m = 0 give the empty product 1.
 */
mpz_class moment_product(MomentQuery q);

/*
 * The same moment as the partition sum: over weights K = 0..m*n (the
 * exact truncation point: no partition with at most m parts each at
 * most n is heavier) and over bounded partitions of K, of d_lambda^2.
 */
mpz_class moment_partition_sum(MomentQuery q);

/*
 * Truncated Euler product over primes p <= prime_cutoff, inner series
 * truncated at k = series_cutoff. The value is reported together with
 * its truncation parameters, never bare.
 */
struct ZetaFactorEstimate {
    std::string value;        // decimal, full working precision
    double value_approx = 0;  // double rendering of the same number
    long prime_cutoff = 0;
    int series_cutoff = 0;
    int precision_bits = 0;
};

ZetaFactorEstimate a_factor(int m, long prime_cutoff = 100000,
                            int series_cutoff = 64, int precision_bits = 128);

struct DiagnosticEntry {
    int n = 0;
    mpq_class value;  // exact: moment(m,n) over n^{m^2}

    bool operator==(const DiagnosticEntry&) const = default;
};

/*
 * A table of exact normalized moments plus the successive differences,
 * so convergence is observable; no limit value is ever claimed.
 */
struct LimitDiagnostic {
    std::string label;
    bool conditional_on_keating_snaith = false;
    std::vector<DiagnosticEntry> entries;
    std::vector<mpq_class> successive_differences;
    std::string trend;  // "increasing", "decreasing", "constant", "mixed", "single-point", "empty"
};

/* moment(m,n) / n^{m^2} for each n; requires positive n throughout. */
LimitDiagnostic f_estimate(int m, std::span<const int> n_list);

/*
 * Numerically identical to f_estimate but labeled as the arithmetic
 * ratio diagnostic, flagged conditional on the moment-factorization
 * conjecture it presumes.
 */
LimitDiagnostic ratio_estimate(int m, std::span<const int> n_list);

} // namespace lexcount

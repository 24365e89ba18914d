#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lexcount {

/* The four routes to the same number. */
enum class Method { product, partition_sum, brute_arrays, brute_matrices };

std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

/* Desk-scale ceilings for the brute-force routes. */
bool within_guard(Method method, int m, int n);

/*
 * One route, one cell. `threads` only matters to the brute routes;
 * guard limits are the caller's concern here as well.
 */
mpz_class count_by_method(Method method, int m, int n, unsigned threads = 1);

struct MethodResult {
    Method method;
    mpz_class value;
    double wall_ms = 0;
};

struct VerificationCell {
    int m = 0;
    int n = 0;
    std::vector<MethodResult> results;  // only the methods applicable to this cell
    bool agree = true;                  // all computed values equal as exact integers
};

struct VerificationReport {
    std::vector<VerificationCell> cells;
    bool all_agree = true;
};

/*
 * Runs every applicable requested method on every (m,n) cell. A brute
 * route is skipped on cells outside its domain (matrices need m >= 1);
 * guard limits are the caller's concern. Methods always run and report
 * in the canonical order product, partition-sum, brute-arrays,
 * brute-matrices regardless of the request order.
 */
VerificationReport run_verification(const std::vector<std::pair<int, int>>& cells,
                                    const std::vector<Method>& methods,
                                    unsigned threads = 1);

} // namespace lexcount

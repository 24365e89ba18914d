#include "lexcount/verify.hpp"

#include <chrono>
#include <stdexcept>

#include "lexcount/biword.hpp"
#include "lexcount/lpp.hpp"
#include "lexcount/moments.hpp"

namespace lexcount {

std::string method_name(Method m) {
    switch (m) {
        case Method::product:        return "product";
        case Method::partition_sum:  return "partition-sum";
        case Method::brute_arrays:   return "brute-arrays";
        case Method::brute_matrices: return "brute-matrices";
    }
    throw std::logic_error("unhandled method");
}

std::optional<Method> method_from_name(const std::string& name) {
    if (name == "product") return Method::product;
    if (name == "partition-sum") return Method::partition_sum;
    if (name == "brute-arrays") return Method::brute_arrays;
    if (name == "brute-matrices") return Method::brute_matrices;
    return std::nullopt;
}

bool within_guard(Method method, int m, int n) {
    switch (method) {
        case Method::product:
        case Method::partition_sum:
            return true;
        case Method::brute_arrays:
            return static_cast<long long>(m) * n <= 12;
        case Method::brute_matrices:
            return m <= 3 && n <= 4;
    }
    throw std::logic_error("unhandled method");
}

mpz_class count_by_method(Method method, int m, int n, unsigned threads) {
    switch (method) {
        case Method::product:
            return moment_product({m, n});
        case Method::partition_sum:
            return moment_partition_sum({m, n});
        case Method::brute_arrays:
            return mpz_class(enumerate_biwords(m, n, threads).size());
        case Method::brute_matrices:
            return count_matrices(m, n, threads);
    }
    throw std::logic_error("unhandled method");
}

namespace {

bool applicable(Method method, int m) {
    // An empty alphabet still has the one empty biword, but there is no
    // 0-by-0 matrix family to search; the counting routes agree by
    // convention (value 1) so the brute matrix route just sits out.
    return method != Method::brute_matrices || m >= 1;
}

} // namespace

VerificationReport run_verification(const std::vector<std::pair<int, int>>& cells,
                                    const std::vector<Method>& methods,
                                    unsigned threads) {
    constexpr Method canonical[] = {Method::product, Method::partition_sum,
                                    Method::brute_arrays, Method::brute_matrices};
    auto requested = [&](Method m) {
        for (Method r : methods)
            if (r == m) return true;
        return false;
    };

    VerificationReport report;
    for (auto [m, n] : cells) {
        VerificationCell cell;
        cell.m = m;
        cell.n = n;
        for (Method method : canonical) {
            if (!requested(method) || !applicable(method, m))
                continue;
            auto t0 = std::chrono::steady_clock::now();
            mpz_class value = count_by_method(method, m, n, threads);
            auto t1 = std::chrono::steady_clock::now();
            cell.results.push_back(
                {method, std::move(value),
                 std::chrono::duration<double, std::milli>(t1 - t0).count()});
        }
        for (const auto& r : cell.results)
            if (r.value != cell.results.front().value)
                cell.agree = false;
        report.all_agree = report.all_agree && cell.agree;
        report.cells.push_back(std::move(cell));
    }
    return report;
}

} // namespace lexcount

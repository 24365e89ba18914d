#include "lexcount/lpp.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace lexcount {

namespace {

/* Full DP table, 1-based; T(i,j) = x_ij + max(T(i-1,j), T(i,j-1)). */
std::vector<long long> dp_table(const PlanarArray& x) {
    const int m = x.dim();
    std::vector<long long> t(static_cast<std::size_t>(m) * m, 0);
    auto at = [&](int i, int j) -> long long& {
        return t[static_cast<std::size_t>(i - 1) * m + (j - 1)];
    };
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            long long up = (i > 1) ? at(i - 1, j) : 0;
            long long left = (j > 1) ? at(i, j - 1) : 0;
            at(i, j) = x.at(i, j) + std::max(up, left);
        }
    }
    return t;
}

} // namespace

long long last_passage_time(const PlanarArray& x) {
    const int m = x.dim();
    if (m == 0)
        return 0;
    return dp_table(x)[static_cast<std::size_t>(m) * m - 1];
}

PathChain chain_certificate(const PlanarArray& x) {
    PathChain chain;
    const int m = x.dim();
    if (m == 0)
        return chain;
    auto t = dp_table(x);
    auto at = [&](int i, int j) {
        return t[static_cast<std::size_t>(i - 1) * m + (j - 1)];
    };
    int i = m, j = m;
    for (;;) {
        chain.points.push_back({i, j});
        if (i == 1 && j == 1)
            break;
        if (i == 1) {
            --j;
        } else if (j == 1) {
            --i;
        } else if (at(i, j - 1) >= at(i - 1, j)) {
            --j;  // ties take the left predecessor: vertical moves happen early
        } else {
            --i;
        }
    }
    std::reverse(chain.points.begin(), chain.points.end());
    return chain;
}

namespace {

/*
 * DFS over cells in row-major order, keeping the partial DP table in t
 * (0-based here). A cell's DP value lower-bounds the final T(m,m), so
 * any value above n kills the branch; in particular every entry is
 * individually capped by n and the search terminates.
 */
struct MatrixCounter {
    int m = 0;
    int n = 0;
    std::vector<long long> t;  // m*m, row-major, cells at or after the cursor are stale
    mpz_class count = 0;

    void place(int i, int j) {
        if (i == m) {
            ++count;
            return;
        }
        const int ni = (j + 1 == m) ? i + 1 : i;
        const int nj = (j + 1 == m) ? 0 : j + 1;
        const long long up = (i > 0) ? t[static_cast<std::size_t>(i - 1) * m + j] : 0;
        const long long left = (j > 0) ? t[static_cast<std::size_t>(i) * m + j - 1] : 0;
        const long long base = std::max(up, left);
        for (long long v = base; v <= n; ++v) {  // entry x = v - base runs 0..
            t[static_cast<std::size_t>(i) * m + j] = v;
            place(ni, nj);
        }
    }
};

} // namespace

mpz_class count_matrices(int m, int n, unsigned threads) {
    if (m < 1)
        throw std::invalid_argument("count_matrices: dimension must be positive");
    if (n < 0)
        throw std::invalid_argument("count_matrices: bound must be nonnegative");

    // tasks = admissible first rows (their DP values are prefix sums,
    // already capped by n); the remaining rows are searched per task
    std::vector<std::vector<long long>> first_rows;
    std::vector<long long> row(m, 0);
    auto gen_first = [&](auto&& self, int j, long long prefix) -> void {
        if (j == m) {
            first_rows.push_back(row);
            return;
        }
        for (int x = 0; x + prefix <= n; ++x) {
            row[j] = x;
            self(self, j + 1, prefix + x);
        }
    };
    gen_first(gen_first, 0, 0);

    const int tasks = static_cast<int>(first_rows.size());
    std::vector<mpz_class> partial(tasks);
    auto run_task = [&](int idx) {
        MatrixCounter counter;
        counter.m = m;
        counter.n = n;
        counter.t.assign(static_cast<std::size_t>(m) * m, 0);
        long long acc = 0;
        for (int j = 0; j < m; ++j) {
            acc += first_rows[idx][j];
            counter.t[j] = acc;
        }
        counter.place(1, 0);
        partial[idx] = std::move(counter.count);
    };

    unsigned degree = std::max(1u, threads);
    if (degree <= 1 || tasks <= 1) {
        for (int idx = 0; idx < tasks; ++idx)
            run_task(idx);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int idx = next.fetch_add(1); idx < tasks; idx = next.fetch_add(1))
                run_task(idx);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<unsigned>(degree, tasks); ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    mpz_class total = 0;
    for (const auto& c : partial)
        total += c;  // task order; exact integer addition either way
    return total;
}

} // namespace lexcount

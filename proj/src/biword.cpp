#include "lexcount/biword.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <thread>

namespace lexcount {

namespace {

void check_letters(std::span<const BiwordColumn> columns, int m) {
    for (const auto& c : columns)
        if (c.u < 1 || c.u > m || c.v < 1 || c.v > m)
            throw std::invalid_argument("biword letter outside the alphabet");
}

bool columns_sorted(std::span<const BiwordColumn> columns) {
    for (std::size_t i = 1; i < columns.size(); ++i) {
        if (columns[i - 1].u > columns[i].u)
            return false;
        if (columns[i - 1].u == columns[i].u && columns[i - 1].v > columns[i].v)
            return false;
    }
    return true;
}

/* Patience tails for the weakly increasing LIS of the v-row, with undo. */
struct PatienceTails {
    std::vector<int> tails;

    struct Undo {
        std::size_t pos = 0;
        int old = 0;
        bool appended = false;
    };

    Undo push(int v) {
        auto it = std::upper_bound(tails.begin(), tails.end(), v);
        if (it == tails.end()) {
            tails.push_back(v);
            return {tails.size() - 1, 0, true};
        }
        Undo u{static_cast<std::size_t>(it - tails.begin()), *it, false};
        *it = v;
        return u;
    }

    void pop(const Undo& u) {
        if (u.appended)
            tails.pop_back();
        else
            tails[u.pos] = u.old;
    }

    int lis() const { return static_cast<int>(tails.size()); }
};

} // namespace

bool is_lexicographic(std::span<const BiwordColumn> columns, int m) {
    check_letters(columns, m);
    return columns_sorted(columns);
}

Biword::Biword(int m, std::vector<BiwordColumn> columns)
    : m_(m), columns_(std::move(columns)) {
    if (m < 0)
        throw std::invalid_argument("alphabet size must be nonnegative");
    check_letters(columns_, m_);
    if (!columns_sorted(columns_))
        throw std::invalid_argument("biword columns are not in lexicographic order");
}

int longest_weakly_increasing(const Biword& a) {
    PatienceTails tails;
    for (const auto& c : a.columns())
        tails.push(c.v);
    return tails.lis();
}

int longest_weakly_increasing_chain_dp(std::span<const BiwordColumn> columns) {
    const std::size_t k = columns.size();
    std::vector<int> best(k, 1);
    int result = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (columns[j].u <= columns[i].u && columns[j].v <= columns[i].v)
                best[i] = std::max(best[i], best[j] + 1);
        result = std::max(result, best[i]);
    }
    return result;
}

namespace {

/*
 * DFS over sorted column sequences; every prefix is itself a valid
 * biword and is emitted into its size bucket. A branch is cut as soon
 * as the patience state exceeds max_lis, since appending columns never
 * shortens the longest chain.
 */
struct BiwordSearch {
    int m = 0;
    int max_lis = 0;
    int max_size = 0;
    std::vector<BiwordColumn> cols;
    PatienceTails tails;
    std::vector<std::vector<Biword>> buckets;  // by size K

    void extend(int min_code) {
        buckets[cols.size()].emplace_back(m, cols);
        if (static_cast<int>(cols.size()) == max_size)
            return;  // unreachable past here: shape has <= m rows of <= max_lis cells
        for (int code = min_code; code < m * m; ++code) {
            BiwordColumn c{code / m + 1, code % m + 1};
            auto undo = tails.push(c.v);
            if (tails.lis() <= max_lis) {
                cols.push_back(c);
                extend(code);
                cols.pop_back();
            }
            tails.pop(undo);
        }
    }
};

} // namespace

std::vector<Biword> enumerate_biwords(int m, int max_lis, unsigned threads) {
    if (m < 0 || max_lis < 0)
        throw std::invalid_argument("enumerate_biwords: negative parameter");
    const int max_size = m * max_lis;

    // one task per first column; completions of distinct first columns
    // are independent, and merging in column order restores the
    // sequential emission order whatever the thread count
    const int tasks = (max_size > 0) ? m * m : 0;
    std::vector<std::vector<std::vector<Biword>>> per_task(tasks);

    auto run_task = [&](int code) {
        BiwordSearch search;
        search.m = m;
        search.max_lis = max_lis;
        search.max_size = max_size;
        search.buckets.resize(max_size + 1);
        BiwordColumn first{code / m + 1, code % m + 1};
        search.tails.push(first.v);
        if (search.tails.lis() <= max_lis) {
            search.cols.push_back(first);
            search.extend(code);
        }
        per_task[code] = std::move(search.buckets);
    };

    unsigned degree = std::max(1u, threads);
    if (degree <= 1 || tasks <= 1) {
        for (int code = 0; code < tasks; ++code)
            run_task(code);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int code = next.fetch_add(1); code < tasks; code = next.fetch_add(1))
                run_task(code);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<unsigned>(degree, tasks); ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    std::vector<Biword> out;
    out.emplace_back(m, std::vector<BiwordColumn>{});  // K = 0
    for (int k = 1; k <= max_size; ++k)
        for (int code = 0; code < tasks; ++code)
            for (auto& b : per_task[code][k])
                out.push_back(std::move(b));
    return out;
}

PlanarArray::PlanarArray(int m, const std::vector<std::vector<long long>>& rows)
    : PlanarArray(m) {
    if (static_cast<int>(rows.size()) != m)
        throw std::invalid_argument("planar array needs exactly m rows");
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(rows[i].size()) != m)
            throw std::invalid_argument("planar array rows must have length m");
        for (int j = 0; j < m; ++j) {
            if (rows[i][j] < 0)
                throw std::invalid_argument("planar array entries must be nonnegative");
            at(i + 1, j + 1) = rows[i][j];
        }
    }
}

long long PlanarArray::total() const {
    long long s = 0;
    for (long long e : entries_)
        s += e;
    return s;
}

PlanarArray to_matrix(const Biword& a) {
    PlanarArray x(a.alphabet());
    for (const auto& c : a.columns())
        ++x.at(c.u, c.v);
    return x;
}

Biword from_matrix(const PlanarArray& x) {
    std::vector<BiwordColumn> cols;
    for (int i = 1; i <= x.dim(); ++i)
        for (int j = 1; j <= x.dim(); ++j)
            for (long long r = 0; r < x.at(i, j); ++r)
                cols.push_back({i, j});
    return Biword(x.dim(), std::move(cols));
}

std::string render_word(std::span<const int> letters, int m) {
    std::string out;
    if (m <= 26) {
        for (int x : letters)
            out.push_back(static_cast<char>('a' + x - 1));
    } else {
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i > 0)
                out.push_back('.');
            out += std::to_string(letters[i]);
        }
    }
    return out;
}

std::string render_biword(const Biword& a) {
    std::vector<int> u, v;
    u.reserve(a.size());
    v.reserve(a.size());
    for (const auto& c : a.columns()) {
        u.push_back(c.u);
        v.push_back(c.v);
    }
    return render_word(u, a.alphabet()) + ";" + render_word(v, a.alphabet());
}

} // namespace lexcount

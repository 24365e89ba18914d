#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lexcount {

/* One column (u over v) of a two-rowed array. */
struct BiwordColumn {
    int u = 0;
    int v = 0;
    auto operator<=>(const BiwordColumn&) const = default;
};

/*
 * True iff the columns are sorted in the two-key order: u weakly
 * increasing, and v weakly increasing within each block of equal u.
 * Letters outside {1..m} are a precondition violation and throw.
 */
bool is_lexicographic(std::span<const BiwordColumn> columns, int m);

/*
 * A two-rowed lexicographic array over the alphabet {1..m}. The
 * lexicographic column order is a class invariant: construction rejects
 * out-of-range letters and unsorted columns.
 */
class Biword {
public:
    Biword() = default;

    Biword(int m, std::vector<BiwordColumn> columns);

    int alphabet() const { return m_; }
    int size() const { return static_cast<int>(columns_.size()); }
    const std::vector<BiwordColumn>& columns() const { return columns_; }

    bool operator==(const Biword&) const = default;
    auto operator<=>(const Biword& o) const {
        if (auto c = m_ <=> o.m_; c != 0) return c;
        return columns_ <=> o.columns_;
    }

private:
    int m_ = 0;
    std::vector<BiwordColumn> columns_;
};

/*
 * Length of the longest chain of columns at increasing positions that
 * weakly increase in both letters. For a lexicographic array the u-row
 * condition is automatic, so this runs patience sorting on the v-row.
 */
int longest_weakly_increasing(const Biword& a);

/*
 * Same statistic straight from the definition: a quadratic dynamic
 * program over positions, valid for arbitrary column lists. Kept as the
 * independent route against the patience computation.
 */
int longest_weakly_increasing_chain_dp(std::span<const BiwordColumn> columns);

/*
 * Every lexicographic biword over {1..m} with longest weakly increasing
 * subsequence at most max_lis, grouped by size K = 0..m*max_lis and in
 * lexicographic column order within each size. Sizes beyond m*max_lis
 * cannot occur (the insertion-tableau shape has at most m rows of at
 * most max_lis cells). `threads` > 1 splits the search by first column;
 * the emitted order does not depend on it.
 */
std::vector<Biword> enumerate_biwords(int m, int max_lis, unsigned threads = 1);

/* An m-by-m grid of nonnegative integers. */
class PlanarArray {
public:
    PlanarArray() = default;

    explicit PlanarArray(int m) : m_(m), entries_(static_cast<std::size_t>(m) * m, 0) {}

    PlanarArray(int m, const std::vector<std::vector<long long>>& rows);

    int dim() const { return m_; }

    // 1-based (row, column) access
    long long at(int i, int j) const { return entries_[idx(i, j)]; }
    long long& at(int i, int j) { return entries_[idx(i, j)]; }

    long long total() const;

    bool operator==(const PlanarArray&) const = default;

private:
    std::size_t idx(int i, int j) const {
        if (i < 1 || i > m_ || j < 1 || j > m_)
            throw std::out_of_range("planar array index");
        return static_cast<std::size_t>(i - 1) * m_ + (j - 1);
    }

    int m_ = 0;
    std::vector<long long> entries_;
};

/* entries[i][j] = multiplicity of column (i over j); total equals a.size(). */
PlanarArray to_matrix(const Biword& a);

/* The unique lexicographic biword whose column multiplicities are x. */
Biword from_matrix(const PlanarArray& x);

/*
 * Letter rendering for display: 1..26 map to a..z when the alphabet
 * allows it, otherwise letters print as dot-separated integers.
 */
std::string render_word(std::span<const int> letters, int m);
std::string render_biword(const Biword& a);

} // namespace lexcount

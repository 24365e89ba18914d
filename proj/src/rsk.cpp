#include "lexcount/rsk.hpp"

#include <algorithm>
#include <cassert>

namespace lexcount {

namespace {

Partition shape_of(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& r : rows)
        parts.push_back(static_cast<int>(r.size()));
    return Partition(parts);
}

} // namespace

TableauPair rsk_forward(const Biword& a) {
    std::vector<std::vector<int>> p, q;
    for (const auto& col : a.columns()) {
        int x = col.v;
        std::size_t r = 0;
        for (;;) {
            if (r == p.size()) {
                p.emplace_back();
                q.emplace_back();
            }
            auto& row = p[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                q[r].push_back(col.u);  // record where the shape grew
                break;
            }
            std::swap(x, *it);  // bump the leftmost entry strictly greater
            ++r;
        }
    }
    Partition shape = shape_of(p);
    return {SemistandardTableau(shape, std::move(p), a.alphabet()),
            SemistandardTableau(shape, std::move(q), a.alphabet())};
}

Biword rsk_inverse(const TableauPair& pair) {
    if (pair.p.shape() != pair.q.shape())
        throw std::invalid_argument("rsk_inverse: tableau shapes differ");
    if (pair.p.alphabet() != pair.q.alphabet())
        throw std::invalid_argument("rsk_inverse: tableau alphabets differ");
    if (!is_valid_ssyt(pair.p) || !is_valid_ssyt(pair.q))
        throw std::invalid_argument("rsk_inverse: not a valid tableau pair");

    std::vector<std::vector<int>> p = pair.p.rows();
    std::vector<std::vector<int>> q = pair.q.rows();
    std::vector<BiwordColumn> cols_rev;
    cols_rev.reserve(pair.p.weight());

    while (!q.empty()) {
        // Rightmost occurrence of the maximal letter of Q is the most
        // recent insertion; a letter appears at most once per column, so
        // the (letter, column) maximum is unique.
        std::size_t best_r = 0, best_c = 0;
        int best_letter = 0;
        for (std::size_t r = 0; r < q.size(); ++r) {
            for (std::size_t c = 0; c < q[r].size(); ++c) {
                if (q[r][c] > best_letter ||
                    (q[r][c] == best_letter && c > best_c)) {
                    best_letter = q[r][c];
                    best_r = r;
                    best_c = c;
                }
            }
        }
        // for a valid SSYT that cell is a removable corner
        assert(best_c + 1 == q[best_r].size());
        assert(best_r + 1 == q.size() || q[best_r + 1].size() <= best_c);

        q[best_r].pop_back();
        int x = p[best_r].back();
        p[best_r].pop_back();
        for (std::size_t t = best_r; t-- > 0;) {
            auto& row = p[t];
            auto it = std::lower_bound(row.begin(), row.end(), x);
            if (it == row.begin())
                throw std::logic_error("rsk_inverse: reverse bump found no smaller entry");
            --it;  // rightmost entry strictly less than x
            std::swap(x, *it);
        }
        cols_rev.push_back({best_letter, x});
        while (!q.empty() && q.back().empty()) {
            q.pop_back();
            p.pop_back();
        }
    }

    std::reverse(cols_rev.begin(), cols_rev.end());
    return Biword(pair.p.alphabet(), std::move(cols_rev));
}

} // namespace lexcount

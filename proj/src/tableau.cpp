#include "lexcount/tableau.hpp"

namespace lexcount {

bool is_valid_ssyt(const SemistandardTableau& t) {
    const auto& rows = t.rows();
    const int m = t.alphabet();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            int x = rows[r][c];
            if (x < 1 || x > m)
                return false;
            if (c > 0 && rows[r][c - 1] > x)
                return false;  // row must weakly increase
            if (r > 0 && c < rows[r - 1].size() && rows[r - 1][c] >= x)
                return false;  // column must strictly increase
        }
    }
    return true;
}

namespace {

struct SsytSearch {
    const Partition* shape;
    int m;
    std::vector<std::vector<int>> rows;
    std::vector<SemistandardTableau>* out;

    // cells in row-major order; trying letters ascending emits the
    // tableaux in row-major lexicographic order on the entries
    void fill(int r, int c) {
        if (r == shape->length()) {
            out->emplace_back(*shape, rows, m);
            return;
        }
        int next_r = r, next_c = c + 1;
        if (next_c == shape->parts()[r]) {
            ++next_r;
            next_c = 0;
        }
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, rows[r][c - 1]);
        if (r > 0 && c < static_cast<int>(rows[r - 1].size()))
            lo = std::max(lo, rows[r - 1][c] + 1);
        for (int x = lo; x <= m; ++x) {
            rows[r][c] = x;
            fill(next_r, next_c);
        }
    }
};

} // namespace

std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape, int m) {
    std::vector<SemistandardTableau> out;
    if (shape.length() > m)
        return out;
    if (shape.empty()) {
        out.emplace_back(shape, std::vector<std::vector<int>>{}, m);
        return out;
    }
    SsytSearch search{&shape, m, {}, &out};
    search.rows.resize(shape.length());
    for (int r = 0; r < shape.length(); ++r)
        search.rows[r].assign(shape.parts()[r], 0);
    search.fill(0, 0);
    return out;
}

} // namespace lexcount

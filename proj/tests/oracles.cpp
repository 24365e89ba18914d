#include "oracles.hpp"

#include <bit>
#include <stdexcept>

#include "lexcount/tableau.hpp"

namespace lexcount::oracle {

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        partitions_rec(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int weight) {
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(weight, weight, acc, out);
    return out;
}

std::vector<Biword> lex_biwords(int m, int k) {
    std::vector<BiwordColumn> alphabet;
    for (int u = 1; u <= m; ++u)
        for (int v = 1; v <= m; ++v)
            alphabet.push_back({u, v});

    std::vector<Biword> out;
    std::vector<BiwordColumn> acc;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            out.emplace_back(m, acc);
            return;
        }
        for (std::size_t i = from; i < alphabet.size(); ++i) {
            acc.push_back(alphabet[i]);
            self(self, i, left - 1);
            acc.pop_back();
        }
    };
    rec(rec, 0, k);
    return out;
}

int lis_subsets(std::span<const BiwordColumn> columns) {
    if (columns.size() > 20)
        throw std::invalid_argument("subset oracle is limited to 20 columns");
    int best = 0;
    for (unsigned mask = 0; mask < (1u << columns.size()); ++mask) {
        const BiwordColumn* prev = nullptr;
        bool chain = true;
        for (std::size_t i = 0; chain && i < columns.size(); ++i) {
            if (!(mask >> i & 1))
                continue;
            if (prev && !(prev->u <= columns[i].u && prev->v <= columns[i].v))
                chain = false;
            prev = &columns[i];
        }
        if (chain)
            best = std::max(best, std::popcount(mask));
    }
    return best;
}

long long ssyt_assignments(const Partition& shape, int m) {
    int cells = shape.weight();
    if (cells == 0)
        return 1;
    if (m <= 0)
        return 0;

    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= shape.length(); ++i)
        rows.emplace_back(shape.part(i), 1);

    long long count = 0;
    while (true) {
        if (is_valid_ssyt(SemistandardTableau(shape, rows, m)))
            ++count;
        // odometer over the cells, least significant last
        int r = static_cast<int>(rows.size()) - 1;
        int c = static_cast<int>(rows.empty() ? 0 : rows.back().size()) - 1;
        for (;;) {
            if (r < 0)
                return count;
            if (rows[r][c] < m) {
                ++rows[r][c];
                break;
            }
            rows[r][c] = 1;
            if (--c < 0) {
                if (--r >= 0)
                    c = static_cast<int>(rows[r].size()) - 1;
            }
        }
    }
}

namespace {

void chains_rec(const PlanarArray& x, int i, int j, long long sum, long long& best) {
    int m = x.dim();
    if (i == m && j == m) {
        best = std::max(best, sum);
        return;
    }
    for (int i2 = i; i2 <= m; ++i2)
        for (int j2 = j; j2 <= m; ++j2) {
            if (i2 == i && j2 == j)
                continue;
            chains_rec(x, i2, j2, sum + x.at(i2, j2), best);
        }
}

} // namespace

long long lpp_chains(const PlanarArray& x) {
    long long best = x.at(1, 1);  // the one-point chain, total for m = 1
    chains_rec(x, 1, 1, x.at(1, 1), best);
    return best;
}

long long matrices_filtered(int m, int n) {
    if (m < 1)
        throw std::invalid_argument("matrices_filtered needs m >= 1");
    PlanarArray x(m);
    long long count = 0;
    while (true) {
        if (lpp_chains(x) <= n)
            ++count;
        int i = m, j = m;
        for (;;) {
            if (i < 1)
                return count;
            if (x.at(i, j) < n) {
                ++x.at(i, j);
                break;
            }
            x.at(i, j) = 0;
            if (--j < 1) {
                j = m;
                --i;
            }
        }
    }
}

mpz_class moment_factorials(int m, int n) {
    auto factorial = [](int k) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
        return f;
    };
    mpq_class value = 1;
    for (int j = 1; j <= n; ++j) {
        value *= factorial(j - 1);
        value *= factorial(j + 2 * m - 1);
        mpz_class mid = factorial(j + m - 1);
        value /= mid * mid;
    }
    value.canonicalize();
    if (value.get_den() != 1)
        throw std::logic_error("factorial ratio is not an integer");
    return value.get_num();
}

} // namespace lexcount::oracle

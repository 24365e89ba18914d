#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lexcount/lpp.hpp"
#include "lexcount/moments.hpp"
#include "oracles.hpp"

using lexcount::LatticePoint;
using lexcount::PathChain;
using lexcount::PlanarArray;

namespace {

PlanarArray M(const std::vector<std::vector<long long>>& rows) {
    return PlanarArray(static_cast<int>(rows.size()), rows);
}

bool is_monotone_chain(const PathChain& c, int m) {
    if (c.points.empty())
        return false;
    if (!(c.points.front() == LatticePoint{1, 1}))
        return false;
    if (!(c.points.back() == LatticePoint{m, m}))
        return false;
    for (std::size_t i = 0; i + 1 < c.points.size(); ++i) {
        const auto& a = c.points[i];
        const auto& b = c.points[i + 1];
        if (b.i < a.i || b.j < a.j || (b.i == a.i && b.j == a.j))
            return false;
    }
    return true;
}

long long chain_sum(const PathChain& c, const PlanarArray& x) {
    long long s = 0;
    for (const auto& p : c.points)
        s += x.at(p.i, p.j);
    return s;
}

} // namespace

TEST_CASE("passage times on pinned-down matrices") {
    CHECK(lexcount::last_passage_time(M({{7}})) == 7);
    CHECK(lexcount::last_passage_time(M({{0, 0}, {0, 0}})) == 0);
    CHECK(lexcount::last_passage_time(M({{1, 2}, {3, 4}})) == 8);
    CHECK(lexcount::last_passage_time(M({{1, 2, 0}, {3, 0, 0}, {1, 1, 2}})) == 8);
}

TEST_CASE("certificate chains on the worked examples") {
    PathChain zero = lexcount::chain_certificate(M({{0, 0}, {0, 0}}));
    CHECK(zero.points == std::vector<LatticePoint>{{1, 1}, {2, 1}, {2, 2}});

    PathChain worked = lexcount::chain_certificate(M({{1, 2, 0}, {3, 0, 0}, {1, 1, 2}}));
    CHECK(worked.points ==
          std::vector<LatticePoint>{{1, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 3}});
}

TEST_CASE("dynamic program equals the chain-enumeration oracle") {
    // exhaustively over 3x3 matrices with entries <= 2
    PlanarArray x(3);
    for (;;) {
        CHECK(lexcount::last_passage_time(x) == lexcount::oracle::lpp_chains(x));
        int i = 3, j = 3;
        for (;;) {
            if (i < 1)
                goto done;
            if (x.at(i, j) < 2) {
                ++x.at(i, j);
                break;
            }
            x.at(i, j) = 0;
            if (--j < 1) {
                j = 3;
                --i;
            }
        }
    }
done:;
}

TEST_CASE("certificates are maximizing monotone chains on random matrices") {
    std::mt19937 rng(20260822);
    std::uniform_int_distribution<long long> entry(0, 9);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 1 + static_cast<int>(rng() % 4);
        PlanarArray x(m);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                x.at(i, j) = entry(rng);
        PathChain c = lexcount::chain_certificate(x);
        CHECK(is_monotone_chain(c, m));
        CHECK(chain_sum(c, x) == lexcount::last_passage_time(x));
        if (m <= 3)
            CHECK(lexcount::last_passage_time(x) == lexcount::oracle::lpp_chains(x));
    }
}

TEST_CASE("matrix counting agrees with full-grid filtering") {
    for (int n = 0; n <= 4; ++n)
        CHECK(lexcount::count_matrices(1, n) == n + 1);
    for (int n = 0; n <= 3; ++n)
        CHECK(lexcount::count_matrices(2, n) ==
              static_cast<long>(lexcount::oracle::matrices_filtered(2, n)));
    for (int n = 0; n <= 2; ++n)
        CHECK(lexcount::count_matrices(3, n) ==
              static_cast<long>(lexcount::oracle::matrices_filtered(3, n)));
}

TEST_CASE("matrix counting agrees with the moment on the small grid") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= (m < 3 ? 4 : 3); ++n)
            CHECK(lexcount::count_matrices(m, n) == lexcount::moment_product({m, n}));
}

TEST_CASE("worker count never changes the matrix count") {
    for (unsigned threads : {2u, 5u, 8u}) {
        CHECK(lexcount::count_matrices(2, 3, threads) ==
              lexcount::count_matrices(2, 3, 1));
        CHECK(lexcount::count_matrices(3, 2, threads) ==
              lexcount::count_matrices(3, 2, 1));
        CHECK(lexcount::count_matrices(1, 0, threads) == 1);
    }
}

TEST_CASE("matrix counting validates parameters") {
    CHECK_THROWS_AS(lexcount::count_matrices(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(lexcount::count_matrices(2, -1), std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hyperboot/combinatorics.hpp"

using namespace hyperboot;

TEST_CASE("binomial values") {
    CHECK(binom(0, 0) == 1);
    CHECK(binom(5, 2) == 10);
    CHECK(binom(7, 3) == 35);
    CHECK(binom(8, 4) == 70);
    CHECK(binom(4, 0) == 1);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(-1, 0) == 0);
}

TEST_CASE("colex rank endpoints") {
    std::vector<int> lo{1, 2};
    std::vector<int> hi{4, 5};
    CHECK(rank_jset(lo, 5, 2) == 0);
    CHECK(rank_jset(hi, 5, 2) == 9);
}

TEST_CASE("colex rank matches enumeration order") {
    // Independent oracle: list all pairs of [1,5] and sort colexicographically.
    std::vector<std::vector<int>> pairs;
    for (int b = 2; b <= 5; ++b)
        for (int a = 1; a < b; ++a) pairs.push_back({a, b});
    std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
        if (x[1] != y[1]) return x[1] < y[1];
        return x[0] < y[0];
    });
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        CHECK(rank_jset(pairs[i], 5, 2) == i);
        CHECK(unrank_jset(i, 5, 2) == pairs[i]);
    }
    CHECK(rank_jset(std::vector<int>{2, 4}, 5, 2) == 4);
    CHECK(unrank_jset(4, 5, 2) == std::vector<int>{2, 4});
}

TEST_CASE("rank and unrank are mutually inverse") {
    for (int n = 1; n <= 9; ++n)
        for (int j = 1; j <= n; ++j)
            for (Rank r = 0; r < binom(n, j); ++r) {
                auto verts = unrank_jset(r, n, j);
                CHECK(rank_jset(verts, n, j) == r);
            }
}

TEST_CASE("rank validation") {
    CHECK_THROWS_AS(rank_jset(std::vector<int>{2, 1}, 5, 2), std::domain_error);
    CHECK_THROWS_AS(rank_jset(std::vector<int>{1, 6}, 5, 2), std::domain_error);
    CHECK_THROWS_AS(rank_jset(std::vector<int>{1}, 5, 2), std::domain_error);
    CHECK_THROWS_AS(unrank_jset(10, 5, 2), std::domain_error);
}

TEST_CASE("ksubset enumeration is colex ordered and complete") {
    std::vector<int> pool{1, 2, 3, 4, 5, 6};
    std::vector<std::vector<int>> seen;
    for_each_ksubset(pool, 3, [&](std::span<const int> s) {
        seen.emplace_back(s.begin(), s.end());
    });
    CHECK(seen.size() == binom(6, 3));
    for (std::size_t i = 0; i < seen.size(); ++i) CHECK(rank_jset(seen[i]) == i);
}

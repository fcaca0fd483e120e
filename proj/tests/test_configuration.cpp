#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperboot/configuration.hpp"
#include "hyperboot/hypergraph.hpp"

using namespace hyperboot;

TEST_CASE("universe basics") {
    Universe u(6);
    CHECK(u.size() == 6);
    CHECK(u.full());
    CHECK(u.contains(1));
    CHECK(u.contains(6));
    CHECK(!u.contains(7));
    Universe v = u.without(std::vector<int>{2, 5});
    CHECK(v.size() == 4);
    CHECK(v.ambient_n() == 6);
    CHECK(!v.contains(2));
    CHECK(v.contains(3));
    CHECK(!v.full());
}

TEST_CASE("configuration insert, contains, members") {
    Configuration c(2, Universe(5));
    CHECK(c.is_dense());
    CHECK(c.empty());
    CHECK(c.insert(std::vector<int>{1, 2}));
    CHECK(!c.insert(std::vector<int>{1, 2}));
    CHECK(c.insert(std::vector<int>{2, 4}));
    CHECK(c.size() == 2);
    CHECK(c.contains(std::vector<int>{2, 4}));
    CHECK(!c.contains(std::vector<int>{1, 3}));
    // ascending colex iteration
    CHECK(c.members() == std::vector<std::vector<int>>{{1, 2}, {2, 4}});
}

TEST_CASE("configuration member validation") {
    Configuration c(2, Universe(5));
    CHECK_THROWS_AS(c.insert(std::vector<int>{1, 2, 3}), std::domain_error);
    CHECK_THROWS_AS(c.insert(std::vector<int>{2, 1}), std::domain_error);
    CHECK_THROWS_AS(c.insert(std::vector<int>{1, 6}), std::domain_error);
    Configuration r(2, Universe(5).without(std::vector<int>{3}));
    CHECK_THROWS_AS(r.insert(std::vector<int>{1, 3}), std::domain_error);
    CHECK(r.insert(std::vector<int>{1, 4}));
}

TEST_CASE("restriction keeps members disjoint from R and shrinks the universe") {
    Configuration c = Configuration::from_members(2, Universe(5), {{1, 2}, {2, 3}, {4, 5}});
    Configuration restricted = c.restricted(std::vector<int>{2});
    CHECK(restricted.members() == std::vector<std::vector<int>>{{4, 5}});
    CHECK(restricted.universe().size() == 4);
    CHECK(!restricted.universe().contains(2));

    Configuration same = c.restricted(std::vector<int>{});
    CHECK(same == c);
}

TEST_CASE("complete hypergraph restriction") {
    HypergraphModel h = HypergraphModel::complete(6, 3);
    HypergraphModel g = h.restricted(std::vector<int>{6});
    CHECK(g.is_complete());
    CHECK(g.universe().size() == 5);
    CHECK(g.edge_count() == binom(5, 3));
    CHECK(g.is_edge(std::vector<int>{1, 2, 5}));
    CHECK(!g.is_edge(std::vector<int>{1, 2, 6}));
}

TEST_CASE("explicit hypergraph membership and restriction") {
    HypergraphModel h =
        HypergraphModel::explicit_edges(5, 3, {{1, 2, 3}, {1, 4, 5}, {2, 3, 4}});
    CHECK(h.edge_count() == 3);
    CHECK(h.is_edge(std::vector<int>{1, 4, 5}));
    CHECK(!h.is_edge(std::vector<int>{1, 2, 4}));
    HypergraphModel g = h.restricted(std::vector<int>{4});
    CHECK(g.edge_count() == 1);
    CHECK(g.is_edge(std::vector<int>{1, 2, 3}));
}

TEST_CASE("full configuration detection follows the universe") {
    Configuration c(2, Universe(4));
    std::vector<int> pool{1, 2, 3, 4};
    for_each_ksubset(pool, 2, [&](std::span<const int> s) { c.insert(s); });
    CHECK(c.is_full());
    Configuration r = c.restricted(std::vector<int>{4});
    CHECK(r.is_full());  // all pairs of {1,2,3} remain
}

TEST_CASE("sparse fallback above the encoding budget") {
    // C(64, 8) ~ 4.4e9 exceeds the default budget of 2^22 cells.
    Configuration c(8, Universe(64));
    CHECK(!c.is_dense());
    CHECK(c.insert(std::vector<int>{1, 2, 3, 4, 5, 6, 7, 64}));
    CHECK(c.insert(std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8}));
    CHECK(!c.insert(std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8}));
    CHECK(c.size() == 2);
    CHECK(c.contains(std::vector<int>{1, 2, 3, 4, 5, 6, 7, 64}));
    // colex iteration puts {...,8} before {...,64}
    CHECK(c.members().front().back() == 8);
    CHECK_THROWS_AS(c.contains_rank(0), std::logic_error);
}

TEST_CASE("subset_of ignores the ambient universe") {
    Configuration small = Configuration::from_members(2, Universe(4), {{1, 2}});
    Configuration big = Configuration::from_members(2, Universe(6), {{1, 2}, {3, 4}});
    CHECK(small.subset_of(big));
    CHECK(!big.subset_of(small));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperboot/constructions.hpp"
#include "hyperboot/jokers.hpp"

using namespace hyperboot;

TEST_CASE("star_of expands the definition") {
    Configuration s = star_of(std::vector<int>{1}, Universe(4), 2);
    CHECK(s.members() == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}});
    CHECK(s.size() == binom(3, 1));

    Configuration all = star_of(std::vector<int>{}, Universe(4), 2);
    CHECK(all.size() == 6);
    CHECK(all.is_full());

    Configuration big = star_of(std::vector<int>{1, 2}, Universe(5), 3);
    CHECK(big.size() == binom(3, 1));

    CHECK_THROWS_AS(star_of(std::vector<int>{1, 2}, Universe(5), 2), std::domain_error);
}

TEST_CASE("is_joker") {
    Configuration s = star_of(std::vector<int>{1}, Universe(5), 2);
    CHECK(is_joker(std::vector<int>{1}, s));

    Configuration missing(2, Universe(5));
    s.for_each([&](std::span<const int> member) {
        if (!(member[0] == 1 && member[1] == 5)) missing.insert(member);
    });
    CHECK(!is_joker(std::vector<int>{1}, missing));
}

TEST_CASE("last z-centre is a joker after r steps") {
    const int r = 3, n = 9;
    ZConfig z = make_z_config(r, n);
    HypergraphModel h = HypergraphModel::complete(n, 3);
    ProcessState state = make_process(h, 2, r, z.config);
    for (int t = 0; t < r; ++t) state = step(state);
    int centre[1] = {z.centers.back()};
    CHECK(is_joker(centre, state.infected));
}

TEST_CASE("reduced_process with an empty joker set is the same process") {
    HypergraphModel h = HypergraphModel::complete(6, 3);
    Configuration initial = Configuration::from_members(2, Universe(6), {{1, 2}, {3, 4}});
    ProcessState state = reduced_process(initial, std::vector<int>{}, h, 2);
    CHECK(state.r == 2);
    CHECK(state.infected == initial);
    CHECK(state.hypergraph.universe() == h.universe());
}

TEST_CASE("reduced_process validates jokers") {
    HypergraphModel h = HypergraphModel::complete(6, 3);
    Configuration initial = Configuration::from_members(2, Universe(6), {{1, 2}});
    CHECK_THROWS_AS(reduced_process(initial, std::vector<int>{1}, h, 2),
                    std::invalid_argument);
    Configuration starred = star_of(std::vector<int>{1}, Universe(6), 2);
    CHECK_THROWS_AS(reduced_process(starred, std::vector<int>{1, 2}, h, 1),
                    std::invalid_argument);
}

TEST_CASE("tight-case reduction is an equality at every step") {
    const int n = 7, r = 2;
    HypergraphModel h = HypergraphModel::complete(n, 3);
    Configuration initial = star_of(std::vector<int>{1}, Universe(n), 2);
    initial.insert(std::vector<int>{2, 3});
    std::vector<int> jokers{1};

    ProcessState original = make_process(h, 2, r, initial);
    ProcessState reduced = reduced_process(initial, jokers, h, r);
    CHECK(reduced.r == 1);
    CHECK(reduced.hypergraph.universe().size() == 6);
    for (int t = 0; t < 10; ++t) {
        Configuration original_minus = original.infected.restricted(jokers);
        CHECK(reduced.infected == original_minus);
        if (t > 0 && original.frontier.empty() && reduced.frontier.empty()) break;
        original = step(original);
        reduced = step(reduced);
    }
}

TEST_CASE("non-tight reduction stays inside the original") {
    const int n = 8, r = 2, k = 4, j = 2;
    HypergraphModel h = HypergraphModel::complete(n, k);
    Configuration initial = star_of(std::vector<int>{1}, Universe(n), j);
    initial.insert(std::vector<int>{2, 3});
    initial.insert(std::vector<int>{5, 7});
    std::vector<int> jokers{1};

    ProcessState original = make_process(h, j, r, initial);
    ProcessState reduced = reduced_process(initial, jokers, h, r);
    for (int t = 0; t < 10; ++t) {
        CHECK(reduced.infected.subset_of(original.infected.restricted(jokers)));
        if (t > 0 && original.frontier.empty() && reduced.frontier.empty()) break;
        original = step(original);
        reduced = step(reduced);
    }
}

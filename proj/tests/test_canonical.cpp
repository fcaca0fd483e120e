#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hyperboot/canonical.hpp"

using namespace hyperboot;

namespace {

// Independent orbit counter: partition all size-m rank sets under the full
// symmetric group action.
std::uint64_t brute_force_orbit_count(int n, int j, int m) {
    const int total = static_cast<int>(binom(n, j));
    std::vector<std::vector<Rank>> all;
    std::vector<Rank> pick;
    std::function<void(int)> choose = [&](int from) {
        if (static_cast<int>(pick.size()) == m) {
            all.push_back(pick);
            return;
        }
        for (int z = from; z < total; ++z) {
            pick.push_back(static_cast<Rank>(z));
            choose(z + 1);
            pick.pop_back();
        }
    };
    choose(0);

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::set<std::vector<Rank>> canon;
    for (const auto& config : all) {
        std::vector<Rank> least;
        std::vector<int> p = perm;
        do {
            std::vector<Rank> image;
            for (Rank rk : config) {
                auto verts = unrank_jset(rk, n, j);
                std::vector<int> mapped;
                for (int v : verts) mapped.push_back(p[static_cast<std::size_t>(v - 1)]);
                std::sort(mapped.begin(), mapped.end());
                image.push_back(rank_jset(mapped));
            }
            std::sort(image.begin(), image.end());
            if (least.empty() || image < least) least = image;
        } while (std::next_permutation(p.begin(), p.end()));
        canon.insert(least);
    }
    return canon.size();
}

std::vector<Rank> relabel(const std::vector<Rank>& ranks, const std::vector<int>& perm, int n,
                          int j) {
    std::vector<Rank> out;
    for (Rank rk : ranks) {
        auto verts = unrank_jset(rk, n, j);
        std::vector<int> mapped;
        for (int v : verts) mapped.push_back(perm[static_cast<std::size_t>(v - 1)]);
        std::sort(mapped.begin(), mapped.end());
        out.push_back(rank_jset(mapped));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("single orbits of tiny configurations") {
    CHECK(count_canonical_configs(4, 2, 0) == 1);  // the empty configuration
    CHECK(count_canonical_configs(4, 2, 1) == 1);  // all single pairs are equivalent
    CHECK(count_canonical_configs(4, 2, 2) == 2);  // intersecting vs disjoint
}

TEST_CASE("orbit counts match the brute-force partition") {
    CHECK(count_canonical_configs(5, 2, 3) == brute_force_orbit_count(5, 2, 3));
    CHECK(count_canonical_configs(4, 2, 3) == brute_force_orbit_count(4, 2, 3));
    CHECK(count_canonical_configs(5, 3, 2) == brute_force_orbit_count(5, 3, 2));
    CHECK(count_canonical_configs(6, 2, 2) == brute_force_orbit_count(6, 2, 2));
}

TEST_CASE("orbit totals cover every configuration exactly once") {
    // Sum over orbits of orbit sizes must equal C(C(n,j), m). Orbit size =
    // n! / |stabilizer|; count stabilizer by brute force on the canonical rep.
    const int n = 5, j = 2, m = 2;
    std::uint64_t covered = 0;
    enumerate_canonical_configs(n, j, m, [&](const std::vector<Rank>& ranks) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        std::uint64_t stabilizer = 0;
        std::vector<int> p = perm;
        do {
            if (relabel(ranks, p, n, j) == ranks) ++stabilizer;
        } while (std::next_permutation(p.begin(), p.end()));
        covered += 120 / stabilizer;
    });
    CHECK(covered == binom(static_cast<int>(binom(n, j)), m));
}

TEST_CASE("canonical form is a relabeling invariant") {
    std::mt19937_64 gen(11);
    const int n = 7, j = 3;
    for (int trial = 0; trial < 25; ++trial) {
        std::set<Rank> pick;
        while (pick.size() < 4) pick.insert(gen() % binom(n, j));
        std::vector<Rank> ranks(pick.begin(), pick.end());
        std::vector<Rank> canon = canonical_rank_vector(ranks, n, j);

        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), gen);
        std::vector<Rank> shuffled = relabel(ranks, perm, n, j);
        CHECK(canonical_rank_vector(shuffled, n, j) == canon);
        CHECK(canon <= ranks);
        CHECK(is_canonical(canon, n, j));
        CHECK(is_canonical(ranks, n, j) == (canon == ranks));
    }
}

TEST_CASE("enumeration emits canonical forms in deterministic order") {
    std::vector<std::vector<Rank>> first, second;
    enumerate_canonical_configs(5, 2, 3, [&](const std::vector<Rank>& r) { first.push_back(r); });
    enumerate_canonical_configs(5, 2, 3, [&](const std::vector<Rank>& r) { second.push_back(r); });
    CHECK(first == second);
    for (const auto& ranks : first) CHECK(is_canonical(ranks, 5, 2));
}

TEST_CASE("rank and configuration conversions") {
    Configuration c = ranks_to_config({0, 3, 5}, 5, 2);
    CHECK(c.size() == 3);
    CHECK(config_to_ranks(c) == std::vector<Rank>{0, 3, 5});
}

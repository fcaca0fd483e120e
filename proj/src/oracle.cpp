#include "hyperboot/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace hyperboot {

namespace {

bool contains_all(std::span<const int> small, std::span<const int> big) {
    std::size_t ib = 0;
    for (int v : small) {
        while (ib < big.size() && big[ib] < v) ++ib;
        if (ib == big.size() || big[ib] != v) return false;
        ++ib;
    }
    return true;
}

// Pick `remaining` more infected sets (index >= from, ascending) and assign
// each a distinct unused compatible edge.
bool assign(const std::vector<std::vector<int>>& compat, std::size_t from, int remaining,
            std::vector<char>& edge_used) {
    if (remaining == 0) return true;
    if (compat.size() - from < static_cast<std::size_t>(remaining)) return false;
    for (std::size_t i = from; i + static_cast<std::size_t>(remaining) <= compat.size(); ++i) {
        for (int e : compat[i]) {
            if (edge_used[static_cast<std::size_t>(e)]) continue;
            edge_used[static_cast<std::size_t>(e)] = 1;
            if (assign(compat, i + 1, remaining - 1, edge_used)) return true;
            edge_used[static_cast<std::size_t>(e)] = 0;
        }
    }
    return false;
}

}  // namespace

bool brute_force_infection_oracle(std::span<const int> jset, const Configuration& infected,
                                  const HypergraphModel& hypergraph, int r,
                                  std::uint64_t pair_cap) {
    if (infected.contains(jset))
        throw std::invalid_argument("brute_force_infection_oracle: j-set already infected");
    if (r <= 0) return true;

    const std::uint64_t pairs = hypergraph.edge_count() * infected.size();
    if (pairs > pair_cap)
        throw std::runtime_error("brute_force_infection_oracle: instance above size cap");

    const std::vector<std::vector<int>> edges = hypergraph.materialized_edges(pair_cap);
    std::vector<int> un;
    std::vector<std::vector<int>> compat;  // per infected member, compatible edge indices
    infected.for_each([&](std::span<const int> member) {
        un.assign(jset.begin(), jset.end());
        un.insert(un.end(), member.begin(), member.end());
        std::sort(un.begin(), un.end());
        un.erase(std::unique(un.begin(), un.end()), un.end());
        std::vector<int> found;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (contains_all(un, edges[e])) found.push_back(static_cast<int>(e));
        if (!found.empty()) compat.push_back(std::move(found));
    });

    if (static_cast<int>(compat.size()) < r) return false;
    std::vector<char> edge_used(edges.size(), 0);
    return assign(compat, 0, r, edge_used);
}

}  // namespace hyperboot

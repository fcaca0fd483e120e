#include "hyperboot/jokers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hyperboot {

Configuration star_of(std::span<const int> center, const Universe& universe, int j) {
    if (static_cast<int>(center.size()) >= j)
        throw std::domain_error("star_of: center must have fewer than j vertices");
    std::vector<int> sorted_center(center.begin(), center.end());
    std::sort(sorted_center.begin(), sorted_center.end());
    for (int v : sorted_center)
        if (!universe.contains(v))
            throw std::domain_error("star_of: center vertex " + std::to_string(v) +
                                    " not in the universe");
    std::vector<int> rest;
    for (int v : universe.verts())
        if (!std::binary_search(sorted_center.begin(), sorted_center.end(), v)) rest.push_back(v);

    Configuration out(j, universe);
    for_each_ksubset(rest, j - static_cast<int>(center.size()), [&](std::span<const int> extra) {
        std::vector<int> member(sorted_center.begin(), sorted_center.end());
        member.insert(member.end(), extra.begin(), extra.end());
        std::sort(member.begin(), member.end());
        out.insert(member);
    });
    return out;
}

bool is_joker(std::span<const int> center, const Configuration& configuration) {
    return star_of(center, configuration.universe(), configuration.j()).subset_of(configuration);
}

ProcessState reduced_process(const Configuration& initial, std::span<const int> jokers,
                             const HypergraphModel& hypergraph, int r) {
    if (static_cast<int>(jokers.size()) > r)
        throw std::invalid_argument("reduced_process: more jokers than the threshold");
    for (int v : jokers) {
        int single[1] = {v};
        if (!is_joker(single, initial))
            throw std::invalid_argument("reduced_process: vertex " + std::to_string(v) +
                                        " is not a joker for the initial configuration");
    }
    Configuration reduced_initial = initial.restricted(jokers);
    HypergraphModel reduced_graph = hypergraph.restricted(jokers);
    return make_process(std::move(reduced_graph), initial.j(),
                        r - static_cast<int>(jokers.size()), std::move(reduced_initial));
}

}  // namespace hyperboot

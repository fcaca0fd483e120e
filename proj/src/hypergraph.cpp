#include "hyperboot/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hyperboot/combinatorics.hpp"

namespace hyperboot {

HypergraphModel::HypergraphModel(bool complete, Universe universe, int k,
                                 std::vector<std::vector<int>> edges)
    : complete_(complete), universe_(std::move(universe)), k_(k), edges_(std::move(edges)) {
    if (k_ < 2) throw std::domain_error("HypergraphModel: k must be at least 2");
    if (universe_.size() < k_)
        throw std::domain_error("HypergraphModel: universe smaller than k");
    for (auto& e : edges_) {
        if (static_cast<int>(e.size()) != k_)
            throw std::domain_error("HypergraphModel: edge of wrong cardinality");
        int prev = 0;
        for (int v : e) {
            if (v <= prev) throw std::domain_error("HypergraphModel: edge not strictly increasing");
            if (!universe_.contains(v))
                throw std::domain_error("HypergraphModel: edge vertex " + std::to_string(v) +
                                        " not in the universe");
            prev = v;
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

HypergraphModel HypergraphModel::complete(int n, int k) {
    return HypergraphModel(true, Universe(n), k, {});
}

HypergraphModel HypergraphModel::complete(Universe universe, int k) {
    return HypergraphModel(true, std::move(universe), k, {});
}

HypergraphModel HypergraphModel::explicit_edges(int n, int k, std::vector<std::vector<int>> edges) {
    return HypergraphModel(false, Universe(n), k, std::move(edges));
}

HypergraphModel HypergraphModel::explicit_edges(Universe universe, int k,
                                                std::vector<std::vector<int>> edges) {
    return HypergraphModel(false, std::move(universe), k, std::move(edges));
}

bool HypergraphModel::is_edge(std::span<const int> kset) const {
    if (static_cast<int>(kset.size()) != k_) return false;
    if (complete_) return universe_.contains_all(kset);
    std::vector<int> key(kset.begin(), kset.end());
    return std::binary_search(edges_.begin(), edges_.end(), key);
}

std::uint64_t HypergraphModel::edge_count() const {
    if (complete_) return binom(universe_.size(), k_);
    return edges_.size();
}

const std::vector<std::vector<int>>& HypergraphModel::edges() const {
    if (complete_)
        throw std::logic_error("HypergraphModel: complete model has no explicit edge list");
    return edges_;
}

std::vector<std::vector<int>> HypergraphModel::materialized_edges(std::uint64_t cap) const {
    if (!complete_) return edges_;
    const std::uint64_t count = edge_count();
    if (count > cap)
        throw std::runtime_error("HypergraphModel: refusing to materialize " +
                                 std::to_string(count) + " edges (cap " + std::to_string(cap) + ")");
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(count));
    for_each_ksubset(universe_.verts(), k_, [&](std::span<const int> e) {
        out.emplace_back(e.begin(), e.end());
    });
    return out;
}

HypergraphModel HypergraphModel::restricted(std::span<const int> removed) const {
    Universe sub = universe_.without(removed);
    if (complete_) return HypergraphModel(true, std::move(sub), k_, {});
    std::vector<std::vector<int>> kept;
    for (const auto& e : edges_) {
        bool hit = false;
        for (int v : e)
            for (int r : removed)
                if (v == r) hit = true;
        if (!hit) kept.push_back(e);
    }
    return HypergraphModel(false, std::move(sub), k_, std::move(kept));
}

}  // namespace hyperboot

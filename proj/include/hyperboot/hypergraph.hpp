#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperboot/universe.hpp"

namespace hyperboot {

// k-uniform hypergraph: either every k-subset of the universe is an edge
// (Complete, edges never materialized) or an explicit duplicate-free list.
class HypergraphModel {
public:
    static HypergraphModel complete(int n, int k);
    static HypergraphModel complete(Universe universe, int k);
    static HypergraphModel explicit_edges(int n, int k, std::vector<std::vector<int>> edges);
    static HypergraphModel explicit_edges(Universe universe, int k,
                                          std::vector<std::vector<int>> edges);

    bool is_complete() const { return complete_; }
    int k() const { return k_; }
    const Universe& universe() const { return universe_; }

    // `kset` sorted ascending.
    bool is_edge(std::span<const int> kset) const;

    std::uint64_t edge_count() const;

    // Explicit edge list (throws for Complete; use materialized_edges there).
    const std::vector<std::vector<int>>& edges() const;

    // Full edge list; refuses above `cap` edges for Complete.
    std::vector<std::vector<int>> materialized_edges(std::uint64_t cap) const;

    // Induced sub-hypergraph on universe \ removed (edges meeting `removed`
    // are dropped; vertex ids are preserved).
    HypergraphModel restricted(std::span<const int> removed) const;

private:
    HypergraphModel(bool complete, Universe universe, int k,
                    std::vector<std::vector<int>> edges);

    bool complete_;
    Universe universe_;
    int k_;
    std::vector<std::vector<int>> edges_;  // sorted, explicit only
};

}  // namespace hyperboot

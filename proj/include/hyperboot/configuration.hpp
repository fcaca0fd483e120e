#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <vector>

#include "hyperboot/bitset.hpp"
#include "hyperboot/combinatorics.hpp"
#include "hyperboot/universe.hpp"

namespace hyperboot {

// Colex order on sorted vertex lists (equals order of colex ranks).
struct ColexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

// A duplicate-free set of j-sets over a Universe. Membership is kept in a
// dense rank-indexed bitset when C(n, j) fits the encoding budget, otherwise
// in an ordered set of sorted vertex lists. Iteration is always in ascending
// colex order.
class Configuration {
public:
    Configuration(int j, Universe universe);

    static Configuration from_members(int j, Universe universe,
                                      const std::vector<std::vector<int>>& members);

    int j() const { return j_; }
    const Universe& universe() const { return universe_; }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool is_dense() const { return dense_; }

    bool contains(std::span<const int> jset) const;
    // Inserts; returns false if already present. Validates cardinality and
    // universe membership.
    bool insert(std::span<const int> jset);

    // Dense-representation shortcuts (throw when sparse).
    bool contains_rank(Rank r) const;
    void insert_rank(Rank r);

    void for_each(const std::function<void(std::span<const int>)>& fn) const;
    std::vector<std::vector<int>> members() const;

    bool subset_of(const Configuration& other) const;

    // Members disjoint from `removed`; universe loses those vertices.
    Configuration restricted(std::span<const int> removed) const;

    // Full j-configuration: every j-subset of the universe present.
    bool is_full() const { return count_ == binom(universe_.size(), j_); }

    bool operator==(const Configuration& other) const;

    // HYPERBOOT_MAX_CELLS (bits of dense encoding per configuration).
    static std::uint64_t encoding_budget();

private:
    void validate_member(std::span<const int> jset) const;

    int j_;
    Universe universe_;
    bool dense_;
    std::size_t count_ = 0;
    DynamicBitset bits_;                            // dense
    std::set<std::vector<int>, ColexLess> sparse_;  // fallback
};

}  // namespace hyperboot

#pragma once

#include <vector>

#include "hyperboot/configuration.hpp"

namespace hyperboot {

// An (m, j)-star: `size` j-sets pairwise intersecting exactly in `center`.
// Leaves are consumed from `pool` in order.
struct StarSpec {
    int m = 0;
    int j = 0;
    int size = 0;
    std::vector<int> center;
    std::vector<int> pool;
};

Configuration make_star(const StarSpec& spec, int n);

// Lowest-id placement: center {1..m}, pool {m+1, ...}.
StarSpec star_spec_lowest(int m, int j, int size, int n);

struct ZConfig {
    Configuration config;
    std::vector<int> centers;  // v_1 .. v_r in size order
};

// r vertex-disjoint (1,2)-stars of sizes ceil(i/2), i = 1..r; the minimum
// contagious 2-configuration for threshold r. Lowest ids first.
ZConfig make_z_config(int r, int n);

// Adds master vertex v to every member; v must not occur in any member.
Configuration augment(const Configuration& base, int v);

struct RecursiveTight {
    Configuration config;
    std::vector<int> masters;  // v_1 .. v_r
};

// Union over s in [r] of the v_s-augmented best-known contagious
// (j-1)-configuration with threshold s, base case Z_s at k = 4. All the
// sub-configurations share the non-master vertex pool.
RecursiveTight make_recursive_tight(int k, int r, int n);

// Smallest vertices needed by make_recursive_tight (k >= 4) or Z_r (k = 3).
int recursive_tight_vertex_budget(int k, int r);

// All j-subsets of {1, ..., j+r-1}.
Configuration make_clique_config(int j, int r, int n);

}  // namespace hyperboot

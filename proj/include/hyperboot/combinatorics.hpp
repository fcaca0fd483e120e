#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hyperboot {

using Rank = std::uint64_t;

// n choose k, saturating at UINT64_MAX instead of overflowing.
std::uint64_t binom(int n, int k);

// Colexicographic rank of a strictly increasing j-set {a_1 < ... < a_j}:
//   rank = sum_i C(a_i - 1, i).
// Does not depend on the ambient n.
Rank rank_jset(std::span<const int> vertices);

// Validating variant: vertices must be a strictly increasing j-subset of [1, n].
Rank rank_jset(std::span<const int> vertices, int n, int j);

// Inverse of rank_jset for the ambient space [1, n]. rank must be < C(n, j).
std::vector<int> unrank_jset(Rank rank, int n, int j);

// Calls fn(subset) for every k-subset of `pool`, ascending within each subset,
// subsets visited in colex order of the chosen pool positions.
void for_each_ksubset(std::span<const int> pool, int k,
                      const std::function<void(std::span<const int>)>& fn);

}  // namespace hyperboot

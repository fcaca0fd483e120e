#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hyperboot/combinatorics.hpp"
#include "hyperboot/configuration.hpp"

namespace hyperboot {

// Canonical form of a j-configuration on the full vertex set [1, n]: the
// lexicographically least ascending colex-rank vector over all vertex
// relabelings. Exact branch-and-bound; vertices are offered in degree order
// and branches are cut as soon as the committed rank prefix exceeds the
// reference vector.
std::vector<Rank> canonical_rank_vector(const std::vector<Rank>& ranks, int n, int j);

// True iff `ranks` (sorted ascending) already equals its canonical form.
bool is_canonical(const std::vector<Rank>& ranks, int n, int j);

// Emits exactly one representative per relabeling orbit of size-m
// j-configurations on [1, n], in a deterministic order (orderly generation:
// canonical parents extended by a rank above their maximum).
void enumerate_canonical_configs(int n, int j, int m,
                                 const std::function<void(const std::vector<Rank>&)>& emit);

std::uint64_t count_canonical_configs(int n, int j, int m);

std::vector<Rank> config_to_ranks(const Configuration& config);
Configuration ranks_to_config(const std::vector<Rank>& ranks, int n, int j);

}  // namespace hyperboot

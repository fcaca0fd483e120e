#pragma once

#include <cstdint>
#include <span>

#include "hyperboot/configuration.hpp"
#include "hyperboot/hypergraph.hpp"

namespace hyperboot {

// Reference semantics for the infection condition: exhaustive search for r
// pairs (J_i, K_i), distinct in both coordinates, with (J_i u J) <= K_i.
// Materializes the edge set (Complete included) and refuses instances whose
// edge count times infected count exceeds `pair_cap`; the cap is a resource
// guard, not part of the semantics.
bool brute_force_infection_oracle(std::span<const int> jset, const Configuration& infected,
                                  const HypergraphModel& hypergraph, int r,
                                  std::uint64_t pair_cap = 2'000'000);

}  // namespace hyperboot

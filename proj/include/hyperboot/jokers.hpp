#pragma once

#include <span>

#include "hyperboot/configuration.hpp"
#include "hyperboot/process.hpp"

namespace hyperboot {

// S*: every j-set of the universe containing S. Requires |S| < j.
Configuration star_of(std::span<const int> center, const Universe& universe, int j);

// S is a joker for C iff star_of(S) <= C.
bool is_joker(std::span<const int> center, const Configuration& configuration);

// Coupled reduction: given joker vertices S for `initial` (|S| <= r), the
// (r - |S|, initial - S)-process on H - S. Containment against the original
// process holds at every step, with equality in the tight case.
ProcessState reduced_process(const Configuration& initial, std::span<const int> jokers,
                             const HypergraphModel& hypergraph, int r);

}  // namespace hyperboot

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyperboot/configuration.hpp"
#include "hyperboot/hypergraph.hpp"

namespace hyperboot {

// A running (r, A0)-infection process. Plain value: copy freely, advance one
// state per worker at a time.
struct ProcessState {
    HypergraphModel hypergraph;
    int j;
    int r;
    Configuration infected;  // A_t
    Configuration frontier;  // N_t (= A_0 at t = 0)
    int t = 0;
};

ProcessState make_process(HypergraphModel hypergraph, int j, int r, Configuration initial);

// n below this makes the process degenerate; callers warn, they do not fail.
int recommended_min_n(int k, int r);

// Extension set of J against `infected` (tight case only, k = j+1): vertices v
// with some J' in infected \ {J} satisfying J' <= J u {v} and J u {v} an edge.
std::vector<int> ext_set(std::span<const int> jset, const Configuration& infected,
                         const HypergraphModel& hypergraph);

// True iff r pairwise-distinct edges K_i and pairwise-distinct infected j-sets
// J_i exist with (J_i u J) <= K_i. Dispatches to the tight-case extension
// count or the complete-hypergraph slack/forced classification when valid,
// falling back to explicit bipartite matching.
bool infection_check(std::span<const int> jset, const Configuration& infected,
                     const HypergraphModel& hypergraph, int r);

// Explicit augmenting-path matching, no fast paths. Second algebraic route
// used by the equivalence suites.
bool infection_check_matching(std::span<const int> jset, const Configuration& infected,
                              const HypergraphModel& hypergraph, int r);

// One synchronous update: N_{t+1} is computed entirely against the old A_t.
ProcessState step(const ProcessState& state);

struct RunResult {
    Configuration final_infected;
    std::optional<int> tau;  // min{t : A_t = A_{t-1}}; empty when truncated
    bool percolated = false;
    bool truncated = false;
    std::vector<Configuration> trace;  // nonempty frontiers N_1, N_2, ...
};

RunResult run(ProcessState state, std::optional<int> max_steps = {});

bool is_contagious(const Configuration& initial, const HypergraphModel& hypergraph, int r);

}  // namespace hyperboot

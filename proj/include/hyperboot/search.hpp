#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperboot/configuration.hpp"
#include "hyperboot/hypergraph.hpp"

namespace hyperboot {

struct SearchCertificate {
    int n = 0, k = 0, j = 0, r = 0;
    enum class Verdict { Found, ExhaustedNone, Inconclusive } verdict = Verdict::Inconclusive;
    int size = 0;  // witness size / highest exhausted size / size being scanned
    std::optional<Configuration> witness;
    // Orbits up to the reported witness in canonical order (all orbits when
    // exhausted), so the value is independent of the worker count.
    std::uint64_t orbits_tested = 0;
    std::chrono::milliseconds elapsed{0};
    int m_lo = 0, m_hi = 0;
    // ExhaustedNone at a default upper bound claims a contradiction with the
    // bound; surfaced, never silent.
    bool bound_conflict = false;
};

struct SearchOptions {
    std::optional<int> m_lo;
    std::optional<int> m_hi;
    int workers = 1;
    std::uint64_t max_orbits = 0;  // 0 = unlimited
};

// Smallest contagious j-configuration in the complete k-uniform hypergraph on
// [1, n] with threshold r, scanning sizes m_lo..m_hi over one representative
// per relabeling orbit. The reported witness is the canonically least finder
// at the minimal size, independent of the worker count.
SearchCertificate min_contagious(int n, int k, int j, int r, const SearchOptions& options = {});

// Default lower end of the scan: r, raised to the exact (3, 2) minimum there.
int default_search_lower(int k, int j, int r);

// Matching of pairs infected after time zero, greedily earliest-first:
// P_i is the first newly infected pair disjoint from W_{i-1} (earliest step,
// then lowest colex rank), W_i the union of the first i pairs.
struct DisjointWitness {
    std::vector<std::vector<int>> pairs;          // P_1 .. P_s
    std::vector<std::vector<int>> prefix_unions;  // W_0 = {} .. W_s
    std::vector<int> ext_counts;                  // |Ext_{A_0}(P_i) \ W_{i-1}|
};

// Requires k = 3, j = 2.
DisjointWitness disjoint_witness(const Configuration& initial, const HypergraphModel& hypergraph,
                                 int r);

std::string verdict_name(SearchCertificate::Verdict verdict);

}  // namespace hyperboot

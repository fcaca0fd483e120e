#include "hyperboot/search.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "hyperboot/bounds.hpp"
#include "hyperboot/canonical.hpp"
#include "hyperboot/process.hpp"

namespace hyperboot {

namespace {

constexpr std::uint64_t kNoWitness = ~std::uint64_t{0};

// Smallest index of a contagious orbit representative, or kNoWitness.
std::uint64_t scan_size(const std::vector<std::vector<Rank>>& orbits, int n, int k, int j, int r,
                        int workers) {
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{kNoWitness};
    auto work = [&] {
        const HypergraphModel hypergraph = HypergraphModel::complete(n, k);
        for (;;) {
            const std::uint64_t idx = next.fetch_add(1);
            if (idx >= orbits.size()) return;
            if (idx >= best.load()) return;  // every smaller index is already dispatched
            Configuration candidate = ranks_to_config(orbits[static_cast<std::size_t>(idx)], n, j);
            if (is_contagious(candidate, hypergraph, r)) {
                std::uint64_t seen = best.load();
                while (idx < seen && !best.compare_exchange_weak(seen, idx)) {
                }
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return best.load();
}

}  // namespace

int default_search_lower(int k, int j, int r) {
    int lo = r;
    if (k == 3 && j == 2) lo = std::max(lo, static_cast<int>(exact_32(r)));
    return lo;
}

SearchCertificate min_contagious(int n, int k, int j, int r, const SearchOptions& options) {
    if (!(1 <= j && j <= k - 1 && k <= n))
        throw std::domain_error("min_contagious: need 1 <= j <= k-1 <= n-1");
    if (r < 1) throw std::domain_error("min_contagious: r must be positive");
    const std::uint64_t cells = binom(n, j);
    if (cells > Configuration::encoding_budget())
        throw std::domain_error("min_contagious: C(n, j) above the encoding budget");

    const auto start = std::chrono::steady_clock::now();
    SearchCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.j = j;
    cert.r = r;

    const bool default_hi = !options.m_hi.has_value();
    int m_lo = options.m_lo.value_or(default_search_lower(k, j, r));
    int m_hi = options.m_hi.value_or(
        static_cast<int>(std::min<std::uint64_t>(best_known(k, j, r).upper, cells)));
    if (m_lo < 0 || m_lo > m_hi)
        throw std::domain_error("min_contagious: empty size range [" + std::to_string(m_lo) +
                                ", " + std::to_string(m_hi) + "]");
    cert.m_lo = m_lo;
    cert.m_hi = m_hi;

    const int workers = std::max(1, options.workers);
    for (int m = m_lo; m <= m_hi; ++m) {
        std::vector<std::vector<Rank>> orbits;
        enumerate_canonical_configs(n, j, m, [&](const std::vector<Rank>& ranks) {
            orbits.push_back(ranks);
        });
        if (options.max_orbits > 0 && cert.orbits_tested + orbits.size() > options.max_orbits) {
            cert.verdict = SearchCertificate::Verdict::Inconclusive;
            cert.size = m;
            cert.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start);
            return cert;
        }
        const std::uint64_t found = scan_size(orbits, n, k, j, r, workers);
        if (found != kNoWitness) {
            cert.verdict = SearchCertificate::Verdict::Found;
            cert.size = m;
            cert.orbits_tested += found + 1;
            cert.witness = ranks_to_config(orbits[static_cast<std::size_t>(found)], n, j);
            // Witness sanity: a Found verdict must re-verify.
            if (!is_contagious(*cert.witness, HypergraphModel::complete(n, k), r))
                throw std::logic_error("min_contagious: witness failed re-verification");
            cert.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start);
            return cert;
        }
        cert.orbits_tested += orbits.size();
    }
    cert.verdict = SearchCertificate::Verdict::ExhaustedNone;
    cert.size = m_hi;
    cert.bound_conflict = default_hi;
    cert.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return cert;
}

DisjointWitness disjoint_witness(const Configuration& initial, const HypergraphModel& hypergraph,
                                 int r) {
    if (hypergraph.k() != 3 || initial.j() != 2)
        throw std::domain_error("disjoint_witness: defined for k = 3, j = 2 only");
    RunResult result = run(make_process(hypergraph, 2, r, initial));

    // (pair, step infected) for everything infected after time zero.
    std::vector<std::pair<std::vector<int>, int>> newly;
    for (std::size_t h = 0; h < result.trace.size(); ++h)
        result.trace[h].for_each([&](std::span<const int> pair) {
            newly.emplace_back(std::vector<int>(pair.begin(), pair.end()),
                               static_cast<int>(h) + 1);
        });

    DisjointWitness witness;
    std::vector<int> used;  // W_{i-1}, sorted
    witness.prefix_unions.push_back({});
    for (;;) {
        const std::pair<std::vector<int>, int>* pick = nullptr;
        for (const auto& entry : newly) {
            bool disjoint = true;
            for (int v : entry.first)
                if (std::binary_search(used.begin(), used.end(), v)) disjoint = false;
            if (!disjoint) continue;
            // earliest step, then lowest colex rank (trace order is colex)
            if (!pick || entry.second < pick->second) pick = &entry;
        }
        if (!pick) break;
        const std::vector<int>& pair = pick->first;
        witness.ext_counts.push_back([&] {
            int count = 0;
            for (int v : ext_set(pair, initial, hypergraph))
                if (!std::binary_search(used.begin(), used.end(), v)) ++count;
            return count;
        }());
        witness.pairs.push_back(pair);
        for (int v : pair) used.insert(std::upper_bound(used.begin(), used.end(), v), v);
        witness.prefix_unions.push_back(used);
    }
    return witness;
}

std::string verdict_name(SearchCertificate::Verdict verdict) {
    switch (verdict) {
        case SearchCertificate::Verdict::Found:
            return "found";
        case SearchCertificate::Verdict::ExhaustedNone:
            return "exhausted_none";
        case SearchCertificate::Verdict::Inconclusive:
            return "inconclusive";
    }
    return "unknown";
}

}  // namespace hyperboot

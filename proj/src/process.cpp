#include "hyperboot/process.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace hyperboot {

namespace {

std::vector<int> sorted_insert(std::span<const int> base, int v) {
    std::vector<int> out;
    out.reserve(base.size() + 1);
    out.insert(out.end(), base.begin(), base.end());
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

int union_size(std::span<const int> a, std::span<const int> b) {
    std::size_t ia = 0, ib = 0, common = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia] == b[ib]) {
            ++common, ++ia, ++ib;
        } else if (a[ia] < b[ib]) {
            ++ia;
        } else {
            ++ib;
        }
    }
    return static_cast<int>(a.size() + b.size() - common);
}

bool is_subset(std::span<const int> a, std::span<const int> b) {
    std::size_t ib = 0;
    for (int v : a) {
        while (ib < b.size() && b[ib] < v) ++ib;
        if (ib == b.size() || b[ib] != v) return false;
        ++ib;
    }
    return true;
}

// Tight case: count extension vertices, stopping once `need` are found.
int ext_count_up_to(std::span<const int> jset, const Configuration& infected,
                    const HypergraphModel& hypergraph, int need) {
    int found = 0;
    std::vector<int> edge, candidate;
    for (int v : hypergraph.universe().verts()) {
        if (std::binary_search(jset.begin(), jset.end(), v)) continue;
        edge = sorted_insert(jset, v);
        if (!hypergraph.is_complete() && !hypergraph.is_edge(edge)) continue;
        // j-subsets of edge containing v, i.e. drop one vertex of J
        bool extends = false;
        for (std::size_t drop = 0; drop < edge.size() && !extends; ++drop) {
            if (edge[drop] == v) continue;  // dropping v yields J itself
            candidate.clear();
            for (std::size_t q = 0; q < edge.size(); ++q)
                if (q != drop) candidate.push_back(edge[q]);
            if (infected.contains(candidate)) extends = true;
        }
        if (extends && ++found >= need && need > 0) return found;
    }
    return found;
}

// Complete non-tight fast path: infected sets with |J' u J| < k have edge
// slack; those with |J' u J| = k force the single edge J' u J. A matching of
// size r exists iff slack + distinct forced unions >= r, valid for
// |universe| >= k + r.
bool complete_slack_check(std::span<const int> jset, const Configuration& infected,
                          const HypergraphModel& hypergraph, int r) {
    const int k = hypergraph.k();
    int slack = 0;
    std::set<std::vector<int>> forced;
    bool done = false;
    infected.for_each([&](std::span<const int> member) {
        if (done) return;
        const int u = union_size(jset, member);
        if (u > k) return;
        if (u < k) {
            ++slack;
        } else {
            std::vector<int> un(jset.begin(), jset.end());
            un.insert(un.end(), member.begin(), member.end());
            std::sort(un.begin(), un.end());
            un.erase(std::unique(un.begin(), un.end()), un.end());
            forced.insert(std::move(un));
        }
        if (slack + static_cast<int>(forced.size()) >= r) done = true;
    });
    return done || slack + static_cast<int>(forced.size()) >= r;
}

}  // namespace

int recommended_min_n(int k, int r) { return std::max(k + r - 1, 2 * r + 1); }

ProcessState make_process(HypergraphModel hypergraph, int j, int r, Configuration initial) {
    if (j < 1 || j > hypergraph.k() - 1)
        throw std::domain_error("process: j must satisfy 1 <= j <= k-1");
    if (r < 0) throw std::domain_error("process: negative threshold");
    if (initial.j() != j) throw std::domain_error("process: initial configuration has wrong j");
    if (!(initial.universe() == hypergraph.universe()))
        throw std::domain_error("process: configuration universe differs from hypergraph universe");
    Configuration frontier = initial;
    return ProcessState{std::move(hypergraph), j, r, std::move(initial), std::move(frontier), 0};
}

std::vector<int> ext_set(std::span<const int> jset, const Configuration& infected,
                         const HypergraphModel& hypergraph) {
    if (hypergraph.k() != infected.j() + 1)
        throw std::invalid_argument("ext_set: defined only for the tight case k = j+1");
    std::vector<int> out, edge, candidate;
    for (int v : hypergraph.universe().verts()) {
        if (std::binary_search(jset.begin(), jset.end(), v)) continue;
        edge = sorted_insert(jset, v);
        if (!hypergraph.is_complete() && !hypergraph.is_edge(edge)) continue;
        for (std::size_t drop = 0; drop < edge.size(); ++drop) {
            if (edge[drop] == v) continue;
            candidate.clear();
            for (std::size_t q = 0; q < edge.size(); ++q)
                if (q != drop) candidate.push_back(edge[q]);
            if (infected.contains(candidate)) {
                out.push_back(v);
                break;
            }
        }
    }
    return out;
}

bool infection_check_matching(std::span<const int> jset, const Configuration& infected,
                              const HypergraphModel& hypergraph, int r) {
    if (infected.contains(jset))
        throw std::invalid_argument("infection_check: j-set already infected");
    if (r <= 0) return true;

    // Candidate edges all contain J, so J' u J <= K reduces to J' <= K.
    std::vector<std::vector<int>> candidate_edges;
    if (hypergraph.is_complete()) {
        std::vector<int> rest;
        for (int v : hypergraph.universe().verts())
            if (!std::binary_search(jset.begin(), jset.end(), v)) rest.push_back(v);
        for_each_ksubset(rest, hypergraph.k() - static_cast<int>(jset.size()),
                         [&](std::span<const int> extra) {
                             std::vector<int> e(jset.begin(), jset.end());
                             e.insert(e.end(), extra.begin(), extra.end());
                             std::sort(e.begin(), e.end());
                             candidate_edges.push_back(std::move(e));
                         });
    } else {
        for (const auto& e : hypergraph.edges())
            if (is_subset(jset, e)) candidate_edges.push_back(e);
    }
    if (static_cast<int>(candidate_edges.size()) < r) return false;

    std::vector<std::vector<int>> left;  // compatible infected members
    std::vector<std::vector<int>> adj;   // left index -> candidate edge indices
    infected.for_each([&](std::span<const int> member) {
        std::vector<int> edges_for;
        for (std::size_t e = 0; e < candidate_edges.size(); ++e)
            if (is_subset(member, candidate_edges[e])) edges_for.push_back(static_cast<int>(e));
        if (!edges_for.empty()) {
            left.emplace_back(member.begin(), member.end());
            adj.push_back(std::move(edges_for));
        }
    });
    if (static_cast<int>(left.size()) < r) return false;

    // Kuhn's augmenting paths, stop as soon as r pairs are matched.
    std::vector<int> edge_match(candidate_edges.size(), -1);
    int matched = 0;
    std::vector<char> visited;
    std::function<bool(int)> augment = [&](int li) {
        for (int e : adj[static_cast<std::size_t>(li)]) {
            if (visited[static_cast<std::size_t>(e)]) continue;
            visited[static_cast<std::size_t>(e)] = 1;
            if (edge_match[static_cast<std::size_t>(e)] < 0 ||
                augment(edge_match[static_cast<std::size_t>(e)])) {
                edge_match[static_cast<std::size_t>(e)] = li;
                return true;
            }
        }
        return false;
    };
    for (std::size_t li = 0; li < left.size(); ++li) {
        visited.assign(candidate_edges.size(), 0);
        if (augment(static_cast<int>(li)) && ++matched >= r) return true;
    }
    return false;
}

bool infection_check(std::span<const int> jset, const Configuration& infected,
                     const HypergraphModel& hypergraph, int r) {
    if (infected.contains(jset))
        throw std::invalid_argument("infection_check: j-set already infected");
    if (r <= 0) return true;
    const int k = hypergraph.k();
    const int j = infected.j();
    if (k == j + 1) return ext_count_up_to(jset, infected, hypergraph, r) >= r;
    if (hypergraph.is_complete() && hypergraph.universe().size() >= k + r)
        return complete_slack_check(jset, infected, hypergraph, r);
    return infection_check_matching(jset, infected, hypergraph, r);
}

ProcessState step(const ProcessState& state) {
    Configuration frontier(state.j, state.hypergraph.universe());
    Configuration next = state.infected;
    for_each_ksubset(state.hypergraph.universe().verts(), state.j,
                     [&](std::span<const int> jset) {
                         if (state.infected.contains(jset)) return;
                         if (infection_check(jset, state.infected, state.hypergraph, state.r)) {
                             frontier.insert(jset);
                             next.insert(jset);
                         }
                     });
    return ProcessState{state.hypergraph, state.j, state.r, std::move(next), std::move(frontier),
                        state.t + 1};
}

RunResult run(ProcessState state, std::optional<int> max_steps) {
    RunResult result{Configuration(state.j, state.hypergraph.universe()), std::nullopt, false,
                     false, {}};
    for (;;) {
        if (state.infected.is_full()) {
            // Next frontier is provably empty.
            result.tau = state.t + 1;
            result.percolated = true;
            break;
        }
        if (max_steps && state.t >= *max_steps) {
            result.truncated = true;
            break;
        }
        ProcessState next = step(state);
        if (next.frontier.empty()) {
            result.tau = next.t;
            break;
        }
        result.trace.push_back(next.frontier);
        state = std::move(next);
    }
    result.final_infected = std::move(state.infected);
    return result;
}

bool is_contagious(const Configuration& initial, const HypergraphModel& hypergraph, int r) {
    return run(make_process(hypergraph, initial.j(), r, initial)).percolated;
}

}  // namespace hyperboot

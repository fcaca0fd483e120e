#include "hyperboot/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "hyperboot/canonical.hpp"
#include "hyperboot/constructions.hpp"
#include "hyperboot/jokers.hpp"
#include "hyperboot/oracle.hpp"
#include "hyperboot/process.hpp"
#include "hyperboot/search.hpp"
#include "hyperboot/text_format.hpp"

namespace hyperboot {

namespace {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    // Plain modulo draw: deterministic across standard library implementations.
    int below(int n) { return static_cast<int>(gen() % static_cast<std::uint64_t>(n)); }
    int in(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool coin() { return (gen() & 1) != 0; }
};

Configuration random_configuration(Rng& rng, int n, int j, int percent) {
    Configuration config(j, Universe(n));
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    for_each_ksubset(pool, j, [&](std::span<const int> jset) {
        if (rng.below(100) < percent) config.insert(jset);
    });
    return config;
}

HypergraphModel random_hypergraph(Rng& rng, int n, int k, bool complete) {
    if (complete) return HypergraphModel::complete(n, k);
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<std::vector<int>> edges;
    for_each_ksubset(pool, k, [&](std::span<const int> e) {
        if (rng.coin()) edges.emplace_back(e.begin(), e.end());
    });
    if (edges.empty()) {
        std::vector<int> e(static_cast<std::size_t>(k));
        std::iota(e.begin(), e.end(), 1);
        edges.push_back(std::move(e));
    }
    return HypergraphModel::explicit_edges(n, k, std::move(edges));
}

std::string dump_instance(const HypergraphModel& hypergraph, const Configuration& initial, int r,
                          const std::string& note) {
    std::ostringstream out;
    out << "# " << note << "\n";
    out << "# n=" << hypergraph.universe().ambient_n() << " k=" << hypergraph.k()
        << " j=" << initial.j() << " r=" << r << "\n";
    if (!hypergraph.is_complete()) {
        out << "# explicit edges:\n";
        for (const auto& e : hypergraph.edges()) {
            out << "#  ";
            for (int v : e) out << ' ' << v;
            out << "\n";
        }
    }
    out << "# initial configuration:\n";
    write_configuration(out, initial);
    return out.str();
}

struct Checker {
    SuiteReport& report;
    const HypergraphModel* hypergraph = nullptr;
    const Configuration* initial = nullptr;
    int r = 0;

    void expect(bool ok, const std::string& what) {
        ++report.checks;
        if (ok) return;
        report.failures.push_back(what);
        if (report.repro.empty() && hypergraph && initial)
            report.repro = dump_instance(*hypergraph, *initial, r, what);
    }
};

// Frontier computed from reference semantics only.
Configuration oracle_frontier(const Configuration& infected, const HypergraphModel& hypergraph,
                              int r) {
    Configuration frontier(infected.j(), hypergraph.universe());
    for_each_ksubset(hypergraph.universe().verts(), infected.j(),
                     [&](std::span<const int> jset) {
                         if (infected.contains(jset)) return;
                         if (brute_force_infection_oracle(jset, infected, hypergraph, r))
                             frontier.insert(jset);
                     });
    return frontier;
}

void suite_empty_input(SuiteReport&, Rng&, int) {}

void suite_oracle_equivalence(SuiteReport& report, Rng& rng, int instances) {
    for (int inst = 0; inst < instances; ++inst) {
        const int k = rng.in(2, 5);
        const int j = rng.in(1, k - 1);
        const int n = rng.in(k, 7);
        const int r = rng.in(1, 3);
        HypergraphModel hypergraph = random_hypergraph(rng, n, k, rng.coin());
        Configuration initial = random_configuration(rng, n, j, rng.in(10, 45));
        Checker check{report, &hypergraph, &initial, r};

        // Membership-level equivalence against both implementation routes.
        for_each_ksubset(hypergraph.universe().verts(), j, [&](std::span<const int> jset) {
            if (initial.contains(jset)) return;
            const bool want = brute_force_infection_oracle(jset, initial, hypergraph, r);
            const bool fast = infection_check(jset, initial, hypergraph, r);
            const bool matching = infection_check_matching(jset, initial, hypergraph, r);
            std::ostringstream what;
            for (int v : jset) what << v << ' ';
            check.expect(fast == want, "infection_check disagrees with oracle at J = " + what.str());
            check.expect(matching == want,
                         "matching route disagrees with oracle at J = " + what.str());
        });

        // Trace-level equivalence to the fixpoint.
        ProcessState state = make_process(hypergraph, j, r, initial);
        for (;;) {
            Configuration want = oracle_frontier(state.infected, hypergraph, r);
            ProcessState next = step(state);
            check.expect(next.frontier == want, "step frontier diverges from oracle at t = " +
                                                    std::to_string(next.t));
            if (next.frontier.empty() || !report.failures.empty()) break;
            state = std::move(next);
        }
        if (!report.failures.empty()) return;
    }
}

void suite_tight_equivalence(SuiteReport& report, Rng& rng, int instances) {
    for (int inst = 0; inst < instances; ++inst) {
        const int j = rng.in(1, 4);
        const int k = j + 1;
        const int n = rng.in(k, 7);
        const int r = rng.in(1, 3);
        HypergraphModel hypergraph = random_hypergraph(rng, n, k, rng.coin());
        Configuration initial = random_configuration(rng, n, j, rng.in(15, 50));
        Checker check{report, &hypergraph, &initial, r};
        for_each_ksubset(hypergraph.universe().verts(), j, [&](std::span<const int> jset) {
            if (initial.contains(jset)) return;
            const int ext = static_cast<int>(ext_set(jset, initial, hypergraph).size());
            const bool via_matching = infection_check_matching(jset, initial, hypergraph, r);
            const bool via_oracle = brute_force_infection_oracle(jset, initial, hypergraph, r);
            check.expect((ext >= r) == via_matching, "extension count disagrees with matching");
            check.expect((ext >= r) == via_oracle, "extension count disagrees with oracle");
        });
        if (!report.failures.empty()) return;
    }
}

void suite_jokers_suffice(SuiteReport& report, Rng& rng, int instances) {
    for (int inst = 0; inst < instances; ++inst) {
        const int j = rng.in(2, 4);
        const int k = j + 1;
        const int r = rng.in(1, 3);
        const int n = rng.in(std::max(k, j + r), 8);
        HypergraphModel hypergraph = HypergraphModel::complete(n, k);
        Configuration initial = random_configuration(rng, n, j, rng.in(0, 30));
        std::vector<int> jokers;
        while (static_cast<int>(jokers.size()) < r) {
            int v = rng.in(1, n);
            if (std::find(jokers.begin(), jokers.end(), v) == jokers.end()) jokers.push_back(v);
        }
        for (int v : jokers) {
            int single[1] = {v};
            star_of(single, Universe(n), j).for_each([&](std::span<const int> member) {
                initial.insert(member);
            });
        }
        if (initial.is_full()) continue;
        Checker check{report, &hypergraph, &initial, r};
        ProcessState next = step(make_process(hypergraph, j, r, initial));
        check.expect(next.infected.is_full(), "r jokers did not complete in one step");
        if (!report.failures.empty()) return;
    }
}

void suite_reduction(SuiteReport& report, Rng& rng, int instances) {
    for (int inst = 0; inst < instances; ++inst) {
        const int k = rng.in(3, 5);
        const int j = rng.in(1, k - 1);
        const int r = rng.in(1, 3);
        // joker vertices need j >= 2; keep k vertices after deleting s
        const int s = j >= 2 ? rng.in(0, std::min(r, 8 - k)) : 0;
        const int n = rng.in(k + s, 8);
        HypergraphModel hypergraph = HypergraphModel::complete(n, k);
        Configuration initial = random_configuration(rng, n, j, rng.in(5, 30));
        std::vector<int> jokers;
        while (static_cast<int>(jokers.size()) < s) {
            int v = rng.in(1, n);
            if (std::find(jokers.begin(), jokers.end(), v) == jokers.end()) jokers.push_back(v);
        }
        std::sort(jokers.begin(), jokers.end());
        for (int v : jokers) {
            int single[1] = {v};
            star_of(single, Universe(n), j).for_each(
                [&](std::span<const int> member) { initial.insert(member); });
        }
        Checker check{report, &hypergraph, &initial, r};

        ProcessState original = make_process(hypergraph, j, r, initial);
        ProcessState reduced = reduced_process(initial, jokers, hypergraph, r);
        for (int t = 0; t < 2 * n + 4; ++t) {
            Configuration original_minus = original.infected.restricted(jokers);
            check.expect(reduced.infected.subset_of(original_minus),
                         "reduced process escaped the original at t = " + std::to_string(t));
            if (j == k - 1)
                check.expect(original_minus.subset_of(reduced.infected),
                             "tight-case reduction not an equality at t = " + std::to_string(t));
            const bool original_fixed = original.frontier.empty() && original.t > 0;
            const bool reduced_fixed = reduced.frontier.empty() && reduced.t > 0;
            if ((original_fixed && reduced_fixed) || !report.failures.empty()) break;
            original = step(original);
            reduced = step(reduced);
        }
        if (!report.failures.empty()) return;
    }
}

void suite_augmentation(SuiteReport& report, Rng& rng, int instances) {
    for (int inst = 0; inst < instances; ++inst) {
        const int k = rng.in(3, 5);
        const int j = rng.in(2, k - 1);
        const int r = rng.in(1, 3);
        const int n = rng.in(k + 2, 8);
        const int v = rng.in(1, n);
        HypergraphModel small = HypergraphModel::complete(n, k - 1).restricted({{v}});
        HypergraphModel big = HypergraphModel::complete(n, k);

        Configuration seed(j - 1, small.universe());
        for_each_ksubset(small.universe().verts(), j - 1, [&](std::span<const int> jset) {
            if (rng.below(100) < 25) seed.insert(jset);
        });
        Configuration augmented = augment(seed, v);
        Configuration big_initial(j, big.universe());
        augmented.for_each([&](std::span<const int> member) { big_initial.insert(member); });
        random_configuration(rng, n, j, 10).for_each(
            [&](std::span<const int> member) { big_initial.insert(member); });

        Checker check{report, &big, &big_initial, r};
        ProcessState lower = make_process(small, j - 1, r, seed);
        ProcessState upper = make_process(big, j, r, big_initial);
        for (int t = 0; t < 2 * n + 4; ++t) {
            check.expect(augment(lower.infected, v).subset_of(upper.infected),
                         "augmented lower process escaped at t = " + std::to_string(t));
            const bool lower_fixed = lower.frontier.empty() && lower.t > 0;
            const bool upper_fixed = upper.frontier.empty() && upper.t > 0;
            if ((lower_fixed && upper_fixed) || !report.failures.empty()) break;
            lower = step(lower);
            upper = step(upper);
        }
        if (!report.failures.empty()) return;
    }
}

void suite_star_closure(SuiteReport& report, Rng& rng, int instances) {
    for (int inst = 0; inst < instances; ++inst) {
        const int k = rng.in(3, 6);
        const int j = rng.in(1, k - 1);
        const int lo = std::max(0, 2 * j - k);
        if (lo > j - 1) continue;
        const int m = rng.in(lo, j - 1);
        const int r = rng.in(1, 3);
        const int n = m + (r + 1) * (j - m) + k;
        Configuration star = make_star(star_spec_lowest(m, j, r, n), n);
        HypergraphModel hypergraph = HypergraphModel::complete(n, k);
        Checker check{report, &hypergraph, &star, r};
        ProcessState next = step(make_process(hypergraph, j, r, star));
        std::vector<int> center(static_cast<std::size_t>(m));
        std::iota(center.begin(), center.end(), 1);
        check.expect(is_joker(center, next.infected),
                     "star centre not a joker after one step (k=" + std::to_string(k) +
                         " j=" + std::to_string(j) + " m=" + std::to_string(m) + ")");
        if (!report.failures.empty()) return;
    }
}

void suite_joker_transfer(SuiteReport& report, Rng& rng, int instances) {
    for (int inst = 0; inst < instances; ++inst) {
        const int k = rng.in(5, 7);
        const int j = rng.in(3, k - 2);
        if (j < 3) continue;
        const int m = rng.in(2, j - 1);
        const int h = rng.in(std::max(0, j + m - k + 1), m - 1);
        if (h >= m || j + m - h > k - 1) continue;
        const int r = rng.in(1, 3);
        const int n = k - 1 + r + 2;
        std::vector<int> first(static_cast<std::size_t>(m));
        std::iota(first.begin(), first.end(), 1);
        std::vector<int> second(first.begin(), first.begin() + h);
        for (int q = 0; q < m - h; ++q) second.push_back(m + 1 + q);
        Configuration initial = star_of(first, Universe(n), j);
        HypergraphModel hypergraph = HypergraphModel::complete(n, k);
        Checker check{report, &hypergraph, &initial, r};
        ProcessState next = step(make_process(hypergraph, j, r, initial));
        check.expect(is_joker(second, next.infected),
                     "joker set did not transfer (k=" + std::to_string(k) + " j=" +
                         std::to_string(j) + " m=" + std::to_string(m) + " h=" +
                         std::to_string(h) + ")");
        if (!report.failures.empty()) return;
    }
}

void suite_joker_percolation(SuiteReport& report, Rng& rng, int instances) {
    for (int inst = 0; inst < instances; ++inst) {
        const int k = rng.in(4, 6);
        const int j = rng.in(2, k - 2);
        const int m = rng.in(1, j - 1);
        const int r = rng.in(1, 3);
        const int n = k - 1 + r + 2;
        std::vector<int> center(static_cast<std::size_t>(m));
        std::iota(center.begin(), center.end(), 1);
        Configuration initial = star_of(center, Universe(n), j);
        HypergraphModel hypergraph = HypergraphModel::complete(n, k);
        Checker check{report, &hypergraph, &initial, r};
        RunResult result = run(make_process(hypergraph, j, r, initial));
        check.expect(result.percolated && result.tau && *result.tau <= m + 1,
                     "joker m-set did not percolate within m steps");
        if (!report.failures.empty()) return;
    }
}

void suite_star_percolation(SuiteReport& report, Rng& rng, int instances) {
    for (int inst = 0; inst < instances; ++inst) {
        const int k = rng.in(4, 6);
        const int j = rng.in(1, k - 2);
        const int lo = std::max(0, 2 * j - k);
        if (lo > j - 1) continue;
        const int m = rng.in(lo, j - 1);
        const int r = rng.in(1, 3);
        const int n = m + (r + 1) * (j - m) + k;
        Configuration star = make_star(star_spec_lowest(m, j, r, n), n);
        HypergraphModel hypergraph = HypergraphModel::complete(n, k);
        Checker check{report, &hypergraph, &star, r};
        RunResult result = run(make_process(hypergraph, j, r, star));
        check.expect(result.percolated && result.tau && *result.tau <= m + 2,
                     "star of size r did not percolate by step 1+m");
        if (!report.failures.empty()) return;
    }
}

void suite_witness_inequality(SuiteReport& report, Rng& rng, int instances) {
    for (int inst = 0; inst < instances; ++inst) {
        const int r = rng.in(1, 4);
        const int n = 2 * r + 2 + recursive_tight_vertex_budget(3, r);
        HypergraphModel hypergraph = HypergraphModel::complete(n, 3);
        Configuration initial = make_z_config(r, n).config;
        // Noise on top of the optimum keeps the instance contagious.
        random_configuration(rng, n, 2, 8).for_each(
            [&](std::span<const int> member) { initial.insert(member); });
        Checker check{report, &hypergraph, &initial, r};
        if (!is_contagious(initial, hypergraph, r)) {
            check.expect(false, "expected contagious instance");
            return;
        }
        DisjointWitness witness = disjoint_witness(initial, hypergraph, r);
        for (std::size_t i = 0; i < witness.ext_counts.size(); ++i)
            check.expect(witness.ext_counts[i] >= r - 2 * static_cast<int>(i),
                         "extension-count inequality violated at i = " + std::to_string(i + 1));
        if (!report.failures.empty()) return;
    }
}

void suite_zr_jokers(SuiteReport& report, Rng& rng, int instances) {
    for (int inst = 0; inst < instances; ++inst) {
        const int r = rng.in(1, 5);
        const int n =
            std::max(rng.in(0, 2) + recursive_tight_vertex_budget(3, r), 2 * r + 1);
        ZConfig z = make_z_config(r, n);
        HypergraphModel hypergraph = HypergraphModel::complete(n, 3);
        Checker check{report, &hypergraph, &z.config, r};
        ProcessState state = make_process(hypergraph, 2, r, z.config);
        for (int t = 0; t < r; ++t) state = step(state);
        int last[1] = {z.centers.back()};
        check.expect(is_joker(last, state.infected),
                     "v_r not a joker after r steps (r = " + std::to_string(r) + ")");
        // All centres become jokers by some T.
        bool all_jokers = false;
        for (int t = r; t <= static_cast<int>(binom(n, 2)) + 1 && !all_jokers; ++t) {
            all_jokers = std::all_of(z.centers.begin(), z.centers.end(), [&](int v) {
                int single[1] = {v};
                return is_joker(single, state.infected);
            });
            if (all_jokers) break;
            state = step(state);
            if (state.frontier.empty()) {
                all_jokers = std::all_of(z.centers.begin(), z.centers.end(), [&](int v) {
                    int single[1] = {v};
                    return is_joker(single, state.infected);
                });
                break;
            }
        }
        check.expect(all_jokers, "not all centres became jokers (r = " + std::to_string(r) + ")");
        if (!report.failures.empty()) return;
    }
}

void suite_monotonicity(SuiteReport& report, Rng& rng, int instances) {
    // Exhaustive at n = 4: every A0 and every single addition.
    for (int r = 1; r <= 2; ++r) {
        const int n = 4;
        HypergraphModel hypergraph = HypergraphModel::complete(n, 3);
        const int cells = static_cast<int>(binom(n, 2));
        for (int mask = 0; mask < (1 << cells); ++mask) {
            Configuration base(2, Universe(n));
            for (int c = 0; c < cells; ++c)
                if (mask & (1 << c)) base.insert(unrank_jset(static_cast<Rank>(c), n, 2));
            for (int extra = 0; extra < cells; ++extra) {
                if (mask & (1 << extra)) continue;
                Configuration bigger = base;
                bigger.insert(unrank_jset(static_cast<Rank>(extra), n, 2));
                Checker check{report, &hypergraph, &base, r};
                ProcessState lo = make_process(hypergraph, 2, r, base);
                ProcessState hi = make_process(hypergraph, 2, r, bigger);
                for (int t = 0; t < cells + 2; ++t) {
                    check.expect(lo.infected.subset_of(hi.infected),
                                 "initial-set monotonicity violated at t = " + std::to_string(t));
                    if (!report.failures.empty()) return;
                    if (lo.frontier.empty() && hi.frontier.empty() && t > 0) break;
                    lo = step(lo);
                    hi = step(hi);
                }
            }
        }
    }
    // Random sampling at n = 5, 6.
    for (int inst = 0; inst < instances; ++inst) {
        const int n = rng.in(5, 6);
        const int r = rng.in(1, 2);
        HypergraphModel hypergraph = HypergraphModel::complete(n, 3);
        Configuration base = random_configuration(rng, n, 2, rng.in(5, 40));
        Configuration bigger = base;
        random_configuration(rng, n, 2, 10).for_each(
            [&](std::span<const int> member) { bigger.insert(member); });
        Checker check{report, &hypergraph, &base, r};
        ProcessState lo = make_process(hypergraph, 2, r, base);
        ProcessState hi = make_process(hypergraph, 2, r, bigger);
        for (int t = 0; t < static_cast<int>(binom(n, 2)) + 2; ++t) {
            check.expect(lo.infected.subset_of(hi.infected),
                         "initial-set monotonicity violated at t = " + std::to_string(t));
            if (!report.failures.empty()) return;
            if (lo.frontier.empty() && hi.frontier.empty() && t > 0) break;
            lo = step(lo);
            hi = step(hi);
        }
    }
}

void suite_z_percolation(SuiteReport& report, Rng&, int) {
    for (int r = 1; r <= 5; ++r) {
        const int n = std::max(recursive_tight_vertex_budget(3, r), 2 * r + 1);
        ZConfig z = make_z_config(r, n);
        HypergraphModel hypergraph = HypergraphModel::complete(n, 3);
        Checker check{report, &hypergraph, &z.config, r};
        check.expect(is_contagious(z.config, hypergraph, r),
                     "Z_r not contagious (r = " + std::to_string(r) + ")");
        if (!report.failures.empty()) return;
    }
}

void suite_recursive_percolation(SuiteReport& report, Rng&, int) {
    const std::vector<std::pair<int, int>> cases = {{4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2}};
    for (auto [k, r] : cases) {
        const int n = recursive_tight_vertex_budget(k, r) + 2;
        RecursiveTight built = make_recursive_tight(k, r, n);
        HypergraphModel hypergraph = HypergraphModel::complete(n, k);
        Checker check{report, &hypergraph, &built.config, r};

        // Masters all become jokers at some T, and one more step completes.
        ProcessState state = make_process(hypergraph, k - 1, r, built.config);
        int all_jokers_at = -1;
        for (int t = 0; t <= static_cast<int>(binom(n, k - 1)) + 1; ++t) {
            const bool all = std::all_of(built.masters.begin(), built.masters.end(), [&](int v) {
                int single[1] = {v};
                return is_joker(single, state.infected);
            });
            if (all) {
                all_jokers_at = t;
                break;
            }
            if (state.frontier.empty() && t > 0) break;
            state = step(state);
        }
        check.expect(all_jokers_at >= 0, "masters never all jokers (k=" + std::to_string(k) +
                                             " r=" + std::to_string(r) + ")");
        if (all_jokers_at >= 0) {
            ProcessState finish = step(state);
            check.expect(finish.infected.is_full(),
                         "percolation did not complete one step after the masters (k=" +
                             std::to_string(k) + " r=" + std::to_string(r) + ")");
        }
        if (!report.failures.empty()) return;
    }
}

void suite_clique_percolation(SuiteReport& report, Rng&, int) {
    const std::vector<std::pair<int, int>> cases = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
    for (auto [j, r] : cases) {
        const int n = j + r + 3;
        Configuration clique = make_clique_config(j, r, n);
        HypergraphModel hypergraph = HypergraphModel::complete(n, j + 1);
        Checker check{report, &hypergraph, &clique, r};
        check.expect(is_contagious(clique, hypergraph, r),
                     "clique construction not contagious (j=" + std::to_string(j) +
                         " r=" + std::to_string(r) + ")");
        if (!report.failures.empty()) return;
    }
}

struct SuiteDef {
    int default_instances;
    std::function<void(SuiteReport&, Rng&, int)> fn;
};

const std::map<std::string, SuiteDef>& suite_table() {
    static const std::map<std::string, SuiteDef> table = {
        {"empty-input", {0, suite_empty_input}},
        {"oracle-equivalence", {60, suite_oracle_equivalence}},
        {"tight-equivalence", {60, suite_tight_equivalence}},
        {"jokers-suffice", {40, suite_jokers_suffice}},
        {"reduction", {40, suite_reduction}},
        {"augmentation", {40, suite_augmentation}},
        {"star-closure", {30, suite_star_closure}},
        {"joker-transfer", {30, suite_joker_transfer}},
        {"joker-percolation", {20, suite_joker_percolation}},
        {"star-percolation", {20, suite_star_percolation}},
        {"witness-inequality", {25, suite_witness_inequality}},
        {"zr-jokers", {15, suite_zr_jokers}},
        {"monotonicity", {120, suite_monotonicity}},
        {"z-percolation", {1, suite_z_percolation}},
        {"recursive-percolation", {1, suite_recursive_percolation}},
        {"clique-percolation", {1, suite_clique_percolation}},
    };
    return table;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, def] : suite_table()) names.push_back(name);
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    const auto& table = suite_table();
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
    SuiteReport report;
    report.suite = name;
    Rng rng(options.seed);
    const int instances = options.instances > 0 ? options.instances : it->second.default_instances;
    it->second.fn(report, rng, instances);
    report.passed = report.failures.empty();
    return report;
}

}  // namespace hyperboot

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperboot/bounds.hpp"
#include "hyperboot/canonical.hpp"
#include "hyperboot/constructions.hpp"
#include "hyperboot/jokers.hpp"
#include "hyperboot/oracle.hpp"
#include "hyperboot/process.hpp"
#include "hyperboot/search.hpp"
#include "hyperboot/verify.hpp"

namespace py = pybind11;

namespace {

using Members = std::vector<std::vector<int>>;

hyperboot::Configuration to_config(const Members& members, int n, int j) {
    return hyperboot::Configuration::from_members(j, hyperboot::Universe(n), members);
}

hyperboot::HypergraphModel to_hypergraph(int n, int k, const std::optional<Members>& edges) {
    if (edges) return hyperboot::HypergraphModel::explicit_edges(n, k, *edges);
    return hyperboot::HypergraphModel::complete(n, k);
}

py::dict run_result_dict(const hyperboot::RunResult& result) {
    py::dict out;
    out["percolated"] = result.percolated;
    out["tau"] = result.tau ? py::object(py::int_(*result.tau)) : py::object(py::none());
    out["truncated"] = result.truncated;
    out["final"] = result.final_infected.members();
    std::vector<Members> trace;
    for (const auto& frontier : result.trace) trace.push_back(frontier.members());
    out["trace"] = trace;
    return out;
}

}  // namespace

PYBIND11_MODULE(_hyperboot, m) {
    m.doc() = "j-set bootstrap percolation in k-uniform hypergraphs";

    m.def("binom", &hyperboot::binom, py::arg("n"), py::arg("k"));
    m.def(
        "rank_jset",
        [](const std::vector<int>& vertices, int n) {
            return hyperboot::rank_jset(vertices, n, static_cast<int>(vertices.size()));
        },
        py::arg("vertices"), py::arg("n"));
    m.def("unrank_jset", &hyperboot::unrank_jset, py::arg("rank"), py::arg("n"), py::arg("j"));

    m.def(
        "run_process",
        [](const Members& initial, int n, int k, int j, int r,
           const std::optional<Members>& edges, std::optional<int> max_steps) {
            auto state = hyperboot::make_process(to_hypergraph(n, k, edges), j, r,
                                                 to_config(initial, n, j));
            return run_result_dict(hyperboot::run(std::move(state), max_steps));
        },
        py::arg("initial"), py::arg("n"), py::arg("k"), py::arg("j"), py::arg("r"),
        py::arg("edges") = py::none(), py::arg("max_steps") = py::none());

    m.def(
        "is_contagious",
        [](const Members& initial, int n, int k, int j, int r,
           const std::optional<Members>& edges) {
            return hyperboot::is_contagious(to_config(initial, n, j), to_hypergraph(n, k, edges),
                                            r);
        },
        py::arg("initial"), py::arg("n"), py::arg("k"), py::arg("j"), py::arg("r"),
        py::arg("edges") = py::none());

    m.def(
        "infection_check",
        [](const std::vector<int>& jset, const Members& infected, int n, int k, int r,
           const std::optional<Members>& edges) {
            const int j = static_cast<int>(jset.size());
            return hyperboot::infection_check(jset, to_config(infected, n, j),
                                              to_hypergraph(n, k, edges), r);
        },
        py::arg("jset"), py::arg("infected"), py::arg("n"), py::arg("k"), py::arg("r"),
        py::arg("edges") = py::none());

    m.def(
        "brute_force_infection_oracle",
        [](const std::vector<int>& jset, const Members& infected, int n, int k, int r,
           const std::optional<Members>& edges) {
            const int j = static_cast<int>(jset.size());
            return hyperboot::brute_force_infection_oracle(jset, to_config(infected, n, j),
                                                           to_hypergraph(n, k, edges), r);
        },
        py::arg("jset"), py::arg("infected"), py::arg("n"), py::arg("k"), py::arg("r"),
        py::arg("edges") = py::none());

    m.def(
        "ext_set",
        [](const std::vector<int>& jset, const Members& infected, int n, int k,
           const std::optional<Members>& edges) {
            const int j = static_cast<int>(jset.size());
            return hyperboot::ext_set(jset, to_config(infected, n, j),
                                      to_hypergraph(n, k, edges));
        },
        py::arg("jset"), py::arg("infected"), py::arg("n"), py::arg("k"),
        py::arg("edges") = py::none());

    m.def(
        "star_of",
        [](const std::vector<int>& center, int n, int j) {
            return hyperboot::star_of(center, hyperboot::Universe(n), j).members();
        },
        py::arg("center"), py::arg("n"), py::arg("j"));

    m.def(
        "is_joker",
        [](const std::vector<int>& center, const Members& configuration, int n, int j) {
            return hyperboot::is_joker(center, to_config(configuration, n, j));
        },
        py::arg("center"), py::arg("configuration"), py::arg("n"), py::arg("j"));

    m.def(
        "restrict_configuration",
        [](const Members& configuration, const std::vector<int>& removed, int n, int j) {
            return to_config(configuration, n, j).restricted(removed).members();
        },
        py::arg("configuration"), py::arg("removed"), py::arg("n"), py::arg("j"));

    m.def(
        "make_star",
        [](int m, int j, int size, int n) {
            return hyperboot::make_star(hyperboot::star_spec_lowest(m, j, size, n), n).members();
        },
        py::arg("m"), py::arg("j"), py::arg("size"), py::arg("n"));

    m.def(
        "make_z_config",
        [](int r, int n) {
            auto z = hyperboot::make_z_config(r, n);
            return py::make_tuple(z.config.members(), z.centers);
        },
        py::arg("r"), py::arg("n"));

    m.def(
        "augment",
        [](const Members& base, int v, int n, int j) {
            return hyperboot::augment(to_config(base, n, j), v).members();
        },
        py::arg("base"), py::arg("v"), py::arg("n"), py::arg("j"));

    m.def(
        "make_recursive_tight",
        [](int k, int r, int n) {
            auto built = hyperboot::make_recursive_tight(k, r, n);
            return py::make_tuple(built.config.members(), built.masters);
        },
        py::arg("k"), py::arg("r"), py::arg("n"));

    m.def(
        "make_clique_config",
        [](int j, int r, int n) { return hyperboot::make_clique_config(j, r, n).members(); },
        py::arg("j"), py::arg("r"), py::arg("n"));

    m.def("exact_small_j", &hyperboot::exact_small_j, py::arg("k"), py::arg("j"), py::arg("r"));
    m.def("exact_32", &hyperboot::exact_32, py::arg("r"));
    m.def("recursive_upper", &hyperboot::recursive_upper, py::arg("k"), py::arg("r"));
    m.def("clique_upper", &hyperboot::clique_upper, py::arg("j"), py::arg("r"));
    m.def(
        "closed_form_upper",
        [](int k, int r) {
            const hyperboot::Rational value = hyperboot::closed_form_upper(k, r);
            return py::make_tuple(value.num(), value.den());
        },
        py::arg("k"), py::arg("r"), "exact value as a (numerator, denominator) pair");
    m.def(
        "best_known",
        [](int k, int j, int r) {
            const hyperboot::BoundReport report = hyperboot::best_known(k, j, r);
            py::dict out;
            out["k"] = report.k;
            out["j"] = report.j;
            out["r"] = report.r;
            out["lower"] = report.lower;
            out["upper"] = report.upper;
            out["exact"] =
                report.exact ? py::object(py::int_(*report.exact)) : py::object(py::none());
            py::list provenance;
            for (const auto& entry : report.provenance)
                provenance.append(py::make_tuple(entry.name, entry.value));
            out["provenance"] = provenance;
            out["notes"] = report.notes;
            return out;
        },
        py::arg("k"), py::arg("j"), py::arg("r"));

    m.def(
        "min_contagious",
        [](int n, int k, int j, int r, std::optional<int> m_lo, std::optional<int> m_hi,
           int workers, std::uint64_t max_orbits) {
            hyperboot::SearchOptions options;
            options.m_lo = m_lo;
            options.m_hi = m_hi;
            options.workers = workers;
            options.max_orbits = max_orbits;
            const hyperboot::SearchCertificate cert =
                hyperboot::min_contagious(n, k, j, r, options);
            py::dict out;
            out["n"] = cert.n;
            out["k"] = cert.k;
            out["j"] = cert.j;
            out["r"] = cert.r;
            out["verdict"] = hyperboot::verdict_name(cert.verdict);
            out["size"] = cert.size;
            out["witness"] = cert.witness ? py::object(py::cast(cert.witness->members()))
                                          : py::object(py::none());
            out["orbits_tested"] = cert.orbits_tested;
            out["elapsed_ms"] = cert.elapsed.count();
            out["bound_conflict"] = cert.bound_conflict;
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("j"), py::arg("r"), py::arg("m_lo") = py::none(),
        py::arg("m_hi") = py::none(), py::arg("workers") = 1, py::arg("max_orbits") = 0);

    m.def(
        "enumerate_canonical_configs",
        [](int n, int j, int m) {
            std::vector<std::vector<hyperboot::Rank>> out;
            hyperboot::enumerate_canonical_configs(
                n, j, m, [&](const std::vector<hyperboot::Rank>& ranks) { out.push_back(ranks); });
            return out;
        },
        py::arg("n"), py::arg("j"), py::arg("m"));

    m.def(
        "disjoint_witness",
        [](const Members& initial, int n, int r) {
            const hyperboot::DisjointWitness witness = hyperboot::disjoint_witness(
                to_config(initial, n, 2), hyperboot::HypergraphModel::complete(n, 3), r);
            py::dict out;
            out["pairs"] = witness.pairs;
            out["prefix_unions"] = witness.prefix_unions;
            out["ext_counts"] = witness.ext_counts;
            return out;
        },
        py::arg("initial"), py::arg("n"), py::arg("r"));

    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed, int instances) {
            hyperboot::SuiteOptions options;
            options.seed = seed;
            options.instances = instances;
            const hyperboot::SuiteReport report = hyperboot::run_suite(name, options);
            py::dict out;
            out["suite"] = report.suite;
            out["passed"] = report.passed;
            out["checks"] = report.checks;
            out["failures"] = report.failures;
            return out;
        },
        py::arg("name"), py::arg("seed") = 1729, py::arg("instances") = 0);
    m.def("suite_names", &hyperboot::suite_names);
}

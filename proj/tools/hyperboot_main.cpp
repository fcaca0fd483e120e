// hyperboot: simulate, construct, search, bounds and verify workflows for
// j-set bootstrap percolation in k-uniform hypergraphs.
//
// Exit codes: 0 ok, 2 input error, 3 expectation failed, 4 inconclusive,
// 1 property violation or internal inconsistency.

#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"

#include "hyperboot/bounds.hpp"
#include "hyperboot/constructions.hpp"
#include "hyperboot/json_io.hpp"
#include "hyperboot/process.hpp"
#include "hyperboot/search.hpp"
#include "hyperboot/text_format.hpp"
#include "hyperboot/verify.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

void warn_small_n(int n, int k, int r) {
    const int floor_n = hyperboot::recommended_min_n(k, r);
    if (n < floor_n)
        std::cerr << "warning: n = " << n << " is below the recommended minimum " << floor_n
                  << " for k = " << k << ", r = " << r << "; results are per-n facts\n";
}

int cmd_simulate(int n, int k, int j, int r, const std::string& input, int max_steps,
                 bool expect_percolate, const std::string& trace_path, bool timing) {
    (void)timing;
    if (r < 1) {
        std::cerr << "error: the infection threshold r must be at least 1\n";
        return 2;
    }
    warn_small_n(n, k, r);
    hyperboot::Configuration initial = hyperboot::read_configuration_file(input, n, j);
    const std::size_t initial_count = initial.size();
    auto state = hyperboot::make_process(hyperboot::HypergraphModel::complete(n, k), j, r,
                                         std::move(initial));
    std::optional<int> cap;
    if (max_steps >= 0) cap = max_steps;
    hyperboot::RunResult result = hyperboot::run(std::move(state), cap);
    if (!trace_path.empty()) {
        std::ofstream trace(trace_path);
        if (!trace) throw std::runtime_error("cannot write trace file: " + trace_path);
        hyperboot::write_trace(trace, result, initial_count);
    }
    std::cout << hyperboot::run_summary_json(result).dump() << "\n";
    if (expect_percolate && !result.percolated) return 3;
    return 0;
}

int cmd_construct(const std::string& family, int m, int j, int size, int r, int k, int n,
                  const std::string& out_path, bool describe) {
    hyperboot::OrderedJson params;
    hyperboot::Configuration config(1, hyperboot::Universe(1));
    if (family == "star") {
        config = hyperboot::make_star(hyperboot::star_spec_lowest(m, j, size, n), n);
        params["m"] = m;
        params["j"] = j;
        params["size"] = size;
        params["n"] = n;
    } else if (family == "zr") {
        config = hyperboot::make_z_config(r, n).config;
        params["r"] = r;
        params["n"] = n;
    } else if (family == "recursive") {
        config = hyperboot::make_recursive_tight(k, r, n).config;
        params["k"] = k;
        params["r"] = r;
        params["n"] = n;
    } else if (family == "clique") {
        config = hyperboot::make_clique_config(j, r, n);
        params["j"] = j;
        params["r"] = r;
        params["n"] = n;
    } else {
        std::cerr << "error: unknown family '" << family << "'\n";
        return 2;
    }

    std::set<int> span;
    config.for_each([&](std::span<const int> member) {
        for (int v : member) span.insert(v);
    });
    hyperboot::OrderedJson header;
    header["family"] = family;
    header["parameters"] = params;
    header["size"] = config.size();
    header["vertex_count"] = span.size();

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write configuration file: " + out_path);
        if (describe) out << "# " << header.dump() << "\n";
        hyperboot::write_configuration(out, config);
        if (describe) std::cout << header.dump() << "\n";
    } else {
        if (describe) std::cout << "# " << header.dump() << "\n";
        hyperboot::write_configuration(std::cout, config);
    }
    return 0;
}

int cmd_search(int n, int k, int j, int r, int m_lo, int m_hi, int workers,
               std::uint64_t max_orbits, const std::string& witness_path, bool timing) {
    warn_small_n(n, k, r);
    hyperboot::SearchOptions options;
    if (m_lo >= 0) options.m_lo = m_lo;
    if (m_hi >= 0) options.m_hi = m_hi;
    options.workers = workers;
    options.max_orbits = max_orbits;
    hyperboot::SearchCertificate cert = hyperboot::min_contagious(n, k, j, r, options);
    std::cout << hyperboot::certificate_json(cert, timing).dump() << "\n";
    if (!witness_path.empty() && cert.witness)
        hyperboot::write_configuration_file(witness_path, *cert.witness);
    if (cert.verdict == hyperboot::SearchCertificate::Verdict::Inconclusive) return 4;
    if (cert.bound_conflict) {
        std::cerr << "error: exhausted all sizes up to the proven upper bound; "
                     "either n is below the threshold regime or this is a bug\n";
        return 1;
    }
    return 0;
}

int cmd_bounds(int k, int j, int r) {
    hyperboot::BoundReport report = hyperboot::best_known(k, j, r);
    std::cout << hyperboot::bound_report_json(report).dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int instances,
               const std::string& repro_path) {
    hyperboot::SuiteOptions options;
    options.seed = seed;
    options.instances = instances;
    hyperboot::SuiteReport report;
    try {
        report = hyperboot::run_suite(suite, options);
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        std::cerr << "available suites:";
        for (const auto& name : hyperboot::suite_names()) std::cerr << " " << name;
        std::cerr << "\n";
        return 2;
    }
    hyperboot::OrderedJson out;
    out["suite"] = report.suite;
    out["passed"] = report.passed;
    out["checks"] = report.checks;
    out["failures"] = report.failures;
    std::cout << out.dump() << "\n";
    if (!report.passed) {
        if (!report.repro.empty()) {
            std::ofstream repro(repro_path);
            if (repro) repro << report.repro;
            std::cerr << "minimal reproducing instance written to " << repro_path << "\n";
        }
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"j-set bootstrap percolation toolkit"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "report measured elapsed_ms instead of 0");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run the infection process on an input file");
    int n = 0, k = 0, j = 0, r = 1;
    std::string input, trace_path;
    int max_steps = -1;
    bool expect_percolate = false;
    simulate->add_option("--n", n, "vertex count")->required();
    simulate->add_option("--k", k, "edge uniformity")->required();
    simulate->add_option("--j", j, "infected-set uniformity")->required();
    simulate->add_option("--r", r, "infection threshold")->required();
    simulate->add_option("--input", input, "configuration file")->required();
    simulate->add_option("--max-steps", max_steps, "truncate after this many steps");
    simulate->add_flag("--expect-percolate", expect_percolate, "exit 3 unless the process percolates");
    simulate->add_option("--trace", trace_path, "write per-step JSON trace to this file");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a named configuration family");
    std::string family, out_path;
    int c_m = 0, c_j = 0, c_size = 0, c_r = 1, c_k = 0, c_n = 0;
    bool describe = false;
    construct->add_option("--family", family, "star | zr | recursive | clique")->required();
    construct->add_option("--m", c_m, "star centre size");
    construct->add_option("--j", c_j, "member size");
    construct->add_option("--size", c_size, "star size");
    construct->add_option("--r", c_r, "threshold parameter");
    construct->add_option("--k", c_k, "edge uniformity (recursive)");
    construct->add_option("--n", c_n, "vertex count")->required();
    construct->add_option("-o,--output", out_path, "write the configuration to this file");
    construct->add_flag("--describe", describe, "emit a JSON header");

    // search
    auto* search = app.add_subcommand("search", "minimal contagious configuration search");
    int s_n = 0, s_k = 0, s_j = 0, s_r = 1, s_mlo = -1, s_mhi = -1, s_workers = 1;
    std::uint64_t s_max_orbits = 0;
    std::string witness_path;
    search->add_option("--n", s_n, "vertex count")->required();
    search->add_option("--k", s_k, "edge uniformity")->required();
    search->add_option("--j", s_j, "infected-set uniformity")->required();
    search->add_option("--r", s_r, "infection threshold")->required();
    search->add_option("--m-lo", s_mlo, "smallest size to scan");
    search->add_option("--m-hi", s_mhi, "largest size to scan");
    search->add_option("--workers", s_workers, "parallel orbit testers");
    search->add_option("--max-orbits", s_max_orbits, "resource cap; exceeding it is inconclusive");
    search->add_option("--witness-out", witness_path, "write a found witness to this file");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate the known bounds");
    int b_k = 0, b_j = 0, b_r = 1;
    bounds->add_option("--k", b_k, "edge uniformity")->required();
    bounds->add_option("--j", b_j, "infected-set uniformity")->required();
    bounds->add_option("--r", b_r, "infection threshold")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run a named property suite");
    std::string suite, repro_path = "verify-repro.txt";
    std::uint64_t seed = kDefaultSeed;
    int instances = 0;
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--instances", instances, "instance count (0 = suite default)");
    verify->add_option("--repro-out", repro_path, "where to dump a failing instance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed())
            return cmd_simulate(n, k, j, r, input, max_steps, expect_percolate, trace_path, timing);
        if (construct->parsed())
            return cmd_construct(family, c_m, c_j, c_size, c_r, c_k, c_n, out_path, describe);
        if (search->parsed())
            return cmd_search(s_n, s_k, s_j, s_r, s_mlo, s_mhi, s_workers, s_max_orbits,
                              witness_path, timing);
        if (bounds->parsed()) return cmd_bounds(b_k, b_j, b_r);
        if (verify->parsed()) return cmd_verify(suite, seed, instances, repro_path);
    } catch (const hyperboot::ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}

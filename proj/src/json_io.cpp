#include "hyperboot/json_io.hpp"

#include <ostream>

namespace hyperboot {

OrderedJson configuration_json(const Configuration& config) {
    OrderedJson arr = OrderedJson::array();
    config.for_each([&](std::span<const int> member) {
        arr.push_back(std::vector<int>(member.begin(), member.end()));
    });
    return arr;
}

OrderedJson run_summary_json(const RunResult& result) {
    OrderedJson out;
    out["percolated"] = result.percolated;
    if (result.tau)
        out["tau"] = *result.tau;
    else
        out["tau"] = nullptr;
    out["final_count"] = result.final_infected.size();
    out["truncated"] = result.truncated;
    return out;
}

void write_trace(std::ostream& out, const RunResult& result, std::size_t initial_count) {
    std::size_t infected = initial_count;
    for (std::size_t h = 0; h < result.trace.size(); ++h) {
        infected += result.trace[h].size();
        OrderedJson obj;
        obj["t"] = h + 1;
        obj["frontier"] = configuration_json(result.trace[h]);
        obj["infected_count"] = infected;
        out << obj.dump() << '\n';
    }
}

OrderedJson certificate_json(const SearchCertificate& cert, bool include_timing) {
    OrderedJson out;
    out["n"] = cert.n;
    out["k"] = cert.k;
    out["j"] = cert.j;
    out["r"] = cert.r;
    out["verdict"] = verdict_name(cert.verdict);
    out["size"] = cert.size;
    if (cert.witness)
        out["witness"] = configuration_json(*cert.witness);
    else
        out["witness"] = nullptr;
    out["orbits_tested"] = cert.orbits_tested;
    out["elapsed_ms"] = include_timing ? cert.elapsed.count() : 0;
    out["m_lo"] = cert.m_lo;
    out["m_hi"] = cert.m_hi;
    if (cert.bound_conflict) out["bound_conflict"] = true;
    return out;
}

OrderedJson bound_report_json(const BoundReport& report) {
    OrderedJson out;
    out["k"] = report.k;
    out["j"] = report.j;
    out["r"] = report.r;
    out["lower"] = report.lower;
    out["upper"] = report.upper;
    if (report.exact)
        out["exact"] = *report.exact;
    else
        out["exact"] = nullptr;
    OrderedJson prov = OrderedJson::array();
    for (const auto& entry : report.provenance) {
        OrderedJson e;
        e["bound"] = entry.name;
        e["value"] = entry.value;
        prov.push_back(e);
    }
    out["provenance"] = prov;
    if (!report.notes.empty()) out["notes"] = report.notes;
    return out;
}

OrderedJson disjoint_witness_json(const DisjointWitness& witness) {
    OrderedJson out;
    out["pairs"] = witness.pairs;
    out["prefix_unions"] = witness.prefix_unions;
    out["ext_counts"] = witness.ext_counts;
    return out;
}

}  // namespace hyperboot

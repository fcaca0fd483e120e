#pragma once

#include <iosfwd>

#include "json.hpp"

#include "hyperboot/bounds.hpp"
#include "hyperboot/process.hpp"
#include "hyperboot/search.hpp"

namespace hyperboot {

using OrderedJson = nlohmann::ordered_json;

OrderedJson configuration_json(const Configuration& config);

OrderedJson run_summary_json(const RunResult& result);

// One JSON object per step: {"t": ..., "frontier": [[...]], "infected_count": ...}.
void write_trace(std::ostream& out, const RunResult& result, std::size_t initial_count);

// include_timing = false pins elapsed_ms to 0 for byte-reproducible output.
OrderedJson certificate_json(const SearchCertificate& cert, bool include_timing);

OrderedJson bound_report_json(const BoundReport& report);

OrderedJson disjoint_witness_json(const DisjointWitness& witness);

}  // namespace hyperboot

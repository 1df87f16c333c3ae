#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tailocus/branches.hpp"
#include "tailocus/dualgraph.hpp"
#include "tailocus/smoothcheck.hpp"
#include "tailocus/strata.hpp"

namespace tailocus {

using Json = nlohmann::ordered_json;

// Graph interchange format, used by every CLI subcommand:
//   {"n": int, "k": int,
//    "vertices": [{"id": str, "genus": 0|1, "degree": int, "marks": [int...]}],
//    "edges": [[str, str], ...]}
// Repeated pairs are parallel edges, ["v","v"] is a self-loop, edge order
// carries no meaning. "marks" may be omitted. d is the vertex degree sum.
// Parsing checks shape and types only; graph-level problems are left to
// validate() so they show up in validation reports, not as parse errors.
DualGraph graph_from_json(const nlohmann::json& j);
Json graph_to_json(const DualGraph& g);

DualGraph graph_from_string(const std::string& text);
std::string graph_to_string(const DualGraph& g);

Json validation_report_to_json(const ValidationReport& report);

// {"m_prime", "mu", "S", "m", "dim", "dimension_obstructed",
//  "generically_in_main"}
Json stratum_to_json(const StratumIndex& idx, const ModuliContext& ctx);

// JSON array of stages: [{"m", "note", "strata": [...]}, ...]
Json schedule_to_json(const BlowupSchedule& schedule);

// Smoothability configuration:
//   {"n": int (optional when "graph" present),
//    "graph": <graph object>  (optional),
//    "tails": [{"edge": str, "coords": [[coeff...], ...]}, ...]}
// Coefficients are JSON integers or "p"/"p/q" strings, ascending degree.
// Without a graph the tails are checked as the complete branch set at a
// contracted elliptic curve; "edge" may then be omitted.
struct SmoothConfig {
    std::optional<int> n;
    std::optional<DualGraph> graph;
    std::vector<std::pair<std::string, ParamTail>> tails;   // (edge name, tail)
};

SmoothConfig smooth_config_from_json(const nlohmann::json& j);
SmoothConfig smooth_config_from_string(const std::string& text);

// {"smoothable", "case": "i"|"ii", "rank": int|null, "m", "certificate"}
Json verdict_to_json(const SmoothabilityVerdict& verdict);

// Branch lattice report: branches with tail counts, all pairwise separation
// stages, and the maximal contracted subcurve.
Json branches_to_json(const DualGraph& g, const std::vector<ContractedSubcurve>& branches);

// The branch lattice as a DOT Hasse diagram; node label
// "{ids} / t=<tail count>", cover edges directed small to large.
std::string branch_lattice_dot(const DualGraph& g,
                               const std::vector<ContractedSubcurve>& branches);

}  // namespace tailocus

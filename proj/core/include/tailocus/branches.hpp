#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tailocus/dualgraph.hpp"
#include "tailocus/strata.hpp"

namespace tailocus {

// All admissible contracted subcurves of a valid graph, in canonical
// (size, lex) order. These are the branches of the declared-contraction
// cover over the point the graph represents: each is one way to select
// nodes separating a contracted genus-1 curve from the rest.
//
// Enumeration is exhaustive over subsets of degree-0 vertices; graphs of
// interest are small. Throws std::invalid_argument past 30 degree-0
// vertices rather than looping for hours.
std::vector<ContractedSubcurve> enumerate_branches(const DualGraph& g);

// Number of points in which the subcurve meets the rest of the curve and
// the marked points: cross-edges plus marks carried by its vertices.
// Internal edges and self-loops do not count.
std::int64_t tail_count(const DualGraph& g, const ContractedSubcurve& e);

// Lattice operations on subcurves of one graph: vertex-set intersection and
// union. For admissible inputs both results are again admissible.
ContractedSubcurve meet(const ContractedSubcurve& e1, const ContractedSubcurve& e2);
ContractedSubcurve join(const ContractedSubcurve& e1, const ContractedSubcurve& e2);

// The schedule stage at which two distinct branches through this point are
// pulled apart: the tail count of their meet. Always strictly below both
// branches' own tail counts. Throws std::invalid_argument when e1 == e2.
std::int64_t separation_stage(const DualGraph& g,
                              const ContractedSubcurve& e1,
                              const ContractedSubcurve& e2);

enum class ScheduleVariant {
    full_space,      // blow up the m-tail loci of the whole moduli space in order
    main_component,  // same centers intersected with the main component
};

struct ScheduleStage {
    int m = 1;
    std::string note;              // e.g. "no-op (Cartier divisor)"
    std::vector<StratumIndex> strata;
};

struct BlowupSchedule {
    ModuliContext ctx;
    ScheduleVariant variant = ScheduleVariant::full_space;
    std::vector<ScheduleStage> stages;   // m = 1 .. d+k, in order
};

// Stage m lists enumerate_strata(ctx, m). In the main-component variant the
// one-tail stage is a no-op (that locus is already a Cartier divisor there)
// and each later stage blows up the intersection of the proper transform
// with the main component.
BlowupSchedule blowup_schedule(const ModuliContext& ctx, ScheduleVariant variant);

}  // namespace tailocus

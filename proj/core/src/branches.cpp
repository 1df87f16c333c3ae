#include "tailocus/branches.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace tailocus {

std::vector<ContractedSubcurve> enumerate_branches(const DualGraph& g) {
    std::vector<std::string> contracted;
    for (const auto& v : g.vertices) {
        if (v.degree == 0) contracted.push_back(v.id);
    }
    if (contracted.size() > 30) {
        throw std::invalid_argument(
            "branch enumeration is exhaustive; refusing " +
            std::to_string(contracted.size()) + " contracted vertices");
    }
    std::vector<ContractedSubcurve> out;
    const auto count = contracted.size();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << count); ++bits) {
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < count; ++i) {
            if (bits & (std::uint64_t{1} << i)) ids.push_back(contracted[i]);
        }
        auto sub = make_subcurve(std::move(ids));
        if (is_admissible_subcurve(g, sub)) out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end(), subcurve_less);
    return out;
}

std::int64_t tail_count(const DualGraph& g, const ContractedSubcurve& e) {
    std::int64_t marks = 0;
    for (const auto& id : e.vertices) {
        if (const Vertex* v = g.find_vertex(id)) {
            marks += static_cast<std::int64_t>(v->marks.size());
        }
    }
    return static_cast<std::int64_t>(cross_edges(g, e).size()) + marks;
}

ContractedSubcurve meet(const ContractedSubcurve& e1, const ContractedSubcurve& e2) {
    std::vector<std::string> ids;
    std::set_intersection(e1.vertices.begin(), e1.vertices.end(), e2.vertices.begin(),
                          e2.vertices.end(), std::back_inserter(ids));
    return ContractedSubcurve{std::move(ids)};
}

ContractedSubcurve join(const ContractedSubcurve& e1, const ContractedSubcurve& e2) {
    std::vector<std::string> ids;
    std::set_union(e1.vertices.begin(), e1.vertices.end(), e2.vertices.begin(),
                   e2.vertices.end(), std::back_inserter(ids));
    return ContractedSubcurve{std::move(ids)};
}

std::int64_t separation_stage(const DualGraph& g, const ContractedSubcurve& e1,
                              const ContractedSubcurve& e2) {
    if (e1 == e2) {
        throw std::invalid_argument("separation stage needs two distinct branches");
    }
    return tail_count(g, meet(e1, e2));
}

std::optional<ContractedSubcurve> maximal_contracted_subcurve(const DualGraph& g) {
    const auto branches = enumerate_branches(g);
    if (branches.empty()) return std::nullopt;
    ContractedSubcurve all = branches.front();
    for (const auto& branch : branches) all = join(all, branch);
    return all;
}

BlowupSchedule blowup_schedule(const ModuliContext& ctx, ScheduleVariant variant) {
    check_context(ctx);
    BlowupSchedule schedule;
    schedule.ctx = ctx;
    schedule.variant = variant;
    const int last = static_cast<int>(ctx.d) + ctx.k;
    for (int m = 1; m <= last; ++m) {
        ScheduleStage stage;
        stage.m = m;
        if (variant == ScheduleVariant::main_component && m == 1) {
            stage.note = "no-op (Cartier divisor)";
        } else if (variant == ScheduleVariant::main_component) {
            stage.note = "blow up the proper transform, intersected with the main component";
        } else if (m == 1) {
            stage.note = "blow up the one-tail locus";
        } else {
            stage.note = "blow up the proper transform of the " + std::to_string(m) +
                         "-tail locus";
        }
        stage.strata = enumerate_strata(ctx, m);
        schedule.stages.push_back(std::move(stage));
    }
    return schedule;
}

}  // namespace tailocus

#include "tailocus/smoothcheck.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tailocus/errors.hpp"

namespace tailocus {

void check_param_tail(const ParamTail& tail, int n) {
    if (static_cast<int>(tail.coords.size()) != n) {
        throw ConfigError("tail has " + std::to_string(tail.coords.size()) +
                          " coordinates, the target has " + std::to_string(n));
    }
    bool moving = false;
    for (const auto& poly : tail.coords) {
        for (std::size_t deg = 1; deg < poly.size(); ++deg) {
            if (poly[deg] != 0) moving = true;
        }
    }
    if (!moving) {
        throw ConfigError("tail parametrization is constant, a tail is never contracted");
    }
}

RatVector shared_attachment_point(const std::vector<ParamTail>& tails) {
    if (tails.empty()) {
        throw ConfigError("no tails given");
    }
    auto value_at_zero = [](const ParamTail& tail) {
        RatVector point;
        point.reserve(tail.coords.size());
        for (const auto& poly : tail.coords) {
            point.push_back(poly.empty() ? Rational(0) : poly[0]);
        }
        return point;
    };
    const RatVector point = value_at_zero(tails.front());
    for (const auto& tail : tails) {
        if (value_at_zero(tail) != point) {
            throw ConfigError("tails do not meet at a common point");
        }
    }
    return point;
}

RatVector tangent_vector(const ParamTail& tail) {
    RatVector v;
    v.reserve(tail.coords.size());
    for (const auto& poly : tail.coords) {
        v.push_back(poly.size() > 1 ? poly[1] : Rational(0));
    }
    return v;
}

std::size_t rank(const TangentConfig& cfg) { return exact_rank(cfg.vectors); }

namespace {

SmoothabilityVerdict decide_case_two(int n, const std::vector<ParamTail>& tails,
                                     std::vector<std::string> names) {
    for (const auto& tail : tails) check_param_tail(tail, n);
    shared_attachment_point(tails);

    TangentConfig cfg;
    cfg.n = n;
    for (const auto& tail : tails) cfg.vectors.push_back(tangent_vector(tail));

    SmoothabilityVerdict verdict;
    verdict.smooth_case = SmoothCase::contracted_curve;
    verdict.m = tails.size();
    verdict.tangent_rank = rank(cfg);
    verdict.smoothable = *verdict.tangent_rank < verdict.m;
    verdict.tail_order = std::move(names);
    if (verdict.smoothable) {
        auto dep = row_dependence(cfg.vectors);
        verdict.certificate.type = Certificate::Type::dependence;
        verdict.certificate.dependence = std::move(*dep);
    } else {
        verdict.certificate.type = Certificate::Type::independent;
        verdict.certificate.pivot_cols = pivot_columns(cfg.vectors);
    }
    return verdict;
}

}  // namespace

SmoothabilityVerdict is_smoothable(const DualGraph& g,
                                   const std::map<std::string, ParamTail>& tails) {
    const auto contracted = maximal_contracted_subcurve(g);
    if (!contracted.has_value()) {
        if (!tails.empty()) {
            throw ConfigError(
                "tails supplied, but the map contracts no genus-1 subcurve");
        }
        SmoothabilityVerdict verdict;
        verdict.smoothable = true;
        verdict.smooth_case = SmoothCase::no_contracted_curve;
        return verdict;
    }

    // each cross-edge is named by its outside endpoint; in a valid genus-1
    // graph those endpoints are pairwise distinct
    std::vector<std::string> names;
    for (const auto& cross : cross_edges(g, *contracted)) {
        names.push_back(cross.outside);
    }
    std::sort(names.begin(), names.end());

    for (const auto& name : names) {
        if (!tails.count(name)) {
            throw ConfigError("missing tail for edge '" + name + "'");
        }
    }
    for (const auto& [name, tail] : tails) {
        (void)tail;
        if (!std::binary_search(names.begin(), names.end(), name)) {
            throw ConfigError("'" + name +
                              "' names no cross-edge of the contracted subcurve");
        }
    }

    std::vector<ParamTail> ordered;
    ordered.reserve(names.size());
    for (const auto& name : names) ordered.push_back(tails.at(name));
    return decide_case_two(g.n, ordered, names);
}

SmoothabilityVerdict smoothability_from_tails(int n, const std::vector<ParamTail>& tails) {
    std::vector<std::string> names;
    names.reserve(tails.size());
    for (std::size_t i = 0; i < tails.size(); ++i) {
        names.push_back(std::to_string(i));
    }
    return decide_case_two(n, tails, std::move(names));
}

}  // namespace tailocus

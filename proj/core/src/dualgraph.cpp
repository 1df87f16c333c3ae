#include "tailocus/dualgraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tailocus {

const Vertex* DualGraph::find_vertex(std::string_view id) const {
    for (const auto& v : vertices) {
        if (v.id == id) return &v;
    }
    return nullptr;
}

DualGraph make_graph(int n, int k, std::vector<Vertex> vertices, std::vector<Edge> edges) {
    DualGraph g;
    g.n = n;
    g.k = k;
    g.vertices = std::move(vertices);
    g.edges = std::move(edges);
    g.d = 0;
    for (const auto& v : g.vertices) g.d += v.degree;
    return g;
}

namespace {

// valence counts edge endpoints, so a self-loop contributes 2
std::map<std::string, std::int64_t> valences(const DualGraph& g) {
    std::map<std::string, std::int64_t> val;
    for (const auto& v : g.vertices) val[v.id] = 0;
    for (const auto& e : g.edges) {
        ++val[e.a];
        ++val[e.b];
    }
    return val;
}

bool connected(const DualGraph& g) {
    if (g.vertices.empty()) return false;
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : g.edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::set<std::string> seen;
    std::vector<std::string> stack{g.vertices.front().id};
    while (!stack.empty()) {
        auto cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        for (const auto& nb : adj[cur]) {
            if (!seen.count(nb)) stack.push_back(nb);
        }
    }
    return seen.size() == g.vertices.size();
}

}  // namespace

ValidationReport validate(const DualGraph& g) {
    ValidationReport report;
    auto structural = [&](std::string code, std::string detail) {
        report.push_back({IssueKind::structural, std::move(code), std::move(detail)});
    };

    if (g.n < 1 || g.k < 0) {
        structural("header", "need n >= 1 and k >= 0, got n = " + std::to_string(g.n) +
                                 ", k = " + std::to_string(g.k));
    }
    if (g.vertices.empty()) {
        structural("empty-graph", "a stable map has at least one component");
    }

    std::set<std::string> ids;
    for (const auto& v : g.vertices) {
        if (!ids.insert(v.id).second) {
            structural("duplicate-vertex-id", "vertex id '" + v.id + "' appears twice");
        }
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        for (const auto* end : {&g.edges[i].a, &g.edges[i].b}) {
            if (!ids.count(*end)) {
                structural("unknown-vertex-in-edge",
                           "edge " + std::to_string(i) + " endpoint '" + *end +
                               "' is not a vertex");
            }
        }
    }
    std::map<int, std::string> mark_owner;
    for (const auto& v : g.vertices) {
        for (int mark : v.marks) {
            auto [it, fresh] = mark_owner.emplace(mark, v.id);
            if (!fresh) {
                structural("duplicate-mark", "mark " + std::to_string(mark) +
                                                 " sits on both '" + it->second +
                                                 "' and '" + v.id + "'");
            }
        }
    }
    if (!report.empty()) {
        return report;  // nothing below is meaningful on malformed data
    }

    auto invariant = [&](std::string code, std::string detail) {
        report.push_back({IssueKind::invariant, std::move(code), std::move(detail)});
    };

    for (const auto& v : g.vertices) {
        if (v.genus != 0 && v.genus != 1) {
            invariant("vertex-genus",
                      "vertex '" + v.id + "' has genus " + std::to_string(v.genus) +
                          ", only 0 and 1 occur in arithmetic genus 1");
        }
        if (v.degree < 0) {
            invariant("vertex-degree", "vertex '" + v.id + "' has negative degree " +
                                           std::to_string(v.degree));
        }
    }

    const bool is_connected = connected(g);
    if (!is_connected) {
        invariant("connectivity", "the curve is disconnected");
    } else {
        std::int64_t genus_sum = 0;
        for (const auto& v : g.vertices) genus_sum += v.genus;
        const auto b1 = static_cast<std::int64_t>(g.edges.size()) -
                        static_cast<std::int64_t>(g.vertices.size()) + 1;
        if (genus_sum + b1 != 1) {
            invariant("arithmetic-genus", "arithmetic genus is " +
                                              std::to_string(genus_sum + b1) +
                                              ", expected 1");
        }
    }

    std::int64_t degree_sum = 0;
    for (const auto& v : g.vertices) degree_sum += v.degree;
    if (degree_sum != g.d) {
        invariant("degree-sum", "declared total degree " + std::to_string(g.d) +
                                    " differs from the vertex degree sum " +
                                    std::to_string(degree_sum));
    }
    if (g.d <= 0) {
        invariant("degree-positive",
                  "total degree " + std::to_string(g.d) + " must be positive");
    }

    std::set<int> marks_seen;
    bool marks_ok = true;
    for (const auto& v : g.vertices) {
        for (int mark : v.marks) {
            marks_seen.insert(mark);
            if (mark < 1 || mark > g.k) marks_ok = false;
        }
    }
    if (!marks_ok || static_cast<int>(marks_seen.size()) != g.k) {
        invariant("marks-partition", "marks must partition {1.." + std::to_string(g.k) +
                                         "} across the vertices");
    }

    const auto val = valences(g);
    for (const auto& v : g.vertices) {
        if (v.degree != 0) continue;
        const auto special = val.at(v.id) + static_cast<std::int64_t>(v.marks.size());
        const std::int64_t needed = v.genus == 0 ? 3 : 1;
        if (special < needed) {
            invariant("stability", "contracted genus-" + std::to_string(v.genus) +
                                       " vertex '" + v.id + "' has " +
                                       std::to_string(special) +
                                       " special points, needs " +
                                       std::to_string(needed));
        }
    }
    return report;
}

bool is_valid(const DualGraph& g) { return validate(g).empty(); }

std::int64_t arithmetic_genus(const DualGraph& g) {
    if (g.vertices.empty() || !connected(g)) {
        throw std::invalid_argument("arithmetic genus needs a nonempty connected graph");
    }
    std::int64_t genus_sum = 0;
    for (const auto& v : g.vertices) genus_sum += v.genus;
    return genus_sum + static_cast<std::int64_t>(g.edges.size()) -
           static_cast<std::int64_t>(g.vertices.size()) + 1;
}

bool ContractedSubcurve::contains(std::string_view id) const {
    return std::binary_search(vertices.begin(), vertices.end(), id);
}

bool ContractedSubcurve::subset_of(const ContractedSubcurve& other) const {
    return std::includes(other.vertices.begin(), other.vertices.end(), vertices.begin(),
                         vertices.end());
}

bool subcurve_less(const ContractedSubcurve& lhs, const ContractedSubcurve& rhs) {
    if (lhs.vertices.size() != rhs.vertices.size()) {
        return lhs.vertices.size() < rhs.vertices.size();
    }
    return lhs.vertices < rhs.vertices;
}

ContractedSubcurve make_subcurve(std::vector<std::string> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ContractedSubcurve{std::move(ids)};
}

bool is_admissible_subcurve(const DualGraph& g, const ContractedSubcurve& e) {
    if (e.vertices.empty()) return false;

    std::int64_t genus_sum = 0;
    for (const auto& id : e.vertices) {
        const Vertex* v = g.find_vertex(id);
        if (v == nullptr || v->degree != 0) return false;
        genus_sum += v->genus;
    }

    std::size_t induced_edges = 0;
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& edge : g.edges) {
        if (e.contains(edge.a) && e.contains(edge.b)) {
            ++induced_edges;
            adj[edge.a].push_back(edge.b);
            adj[edge.b].push_back(edge.a);
        }
    }

    std::set<std::string> seen;
    std::vector<std::string> stack{e.vertices.front()};
    while (!stack.empty()) {
        auto cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        for (const auto& nb : adj[cur]) {
            if (!seen.count(nb)) stack.push_back(nb);
        }
    }
    if (seen.size() != e.vertices.size()) return false;

    const auto b1 = static_cast<std::int64_t>(induced_edges) -
                    static_cast<std::int64_t>(e.vertices.size()) + 1;
    return genus_sum + b1 == 1;
}

std::vector<CrossEdge> cross_edges(const DualGraph& g, const ContractedSubcurve& e) {
    std::vector<CrossEdge> out;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const bool a_in = e.contains(g.edges[i].a);
        const bool b_in = e.contains(g.edges[i].b);
        if (a_in == b_in) continue;
        if (a_in) {
            out.push_back({i, g.edges[i].a, g.edges[i].b});
        } else {
            out.push_back({i, g.edges[i].b, g.edges[i].a});
        }
    }
    return out;
}

}  // namespace tailocus

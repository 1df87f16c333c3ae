#include "tailocus/io.hpp"

#include <algorithm>
#include <sstream>

#include "tailocus/errors.hpp"

namespace tailocus {

namespace {

using BasicJson = nlohmann::json;

const BasicJson& require_member(const BasicJson& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ConfigError(std::string("missing required member \"") + key + "\"");
    }
    return j.at(key);
}

int require_int(const BasicJson& j, const char* what) {
    if (!j.is_number_integer()) {
        throw ConfigError(std::string(what) + " must be an integer");
    }
    return j.get<int>();
}

std::string require_string(const BasicJson& j, const char* what) {
    if (!j.is_string()) {
        throw ConfigError(std::string(what) + " must be a string");
    }
    return j.get<std::string>();
}

Rational coefficient_from_json(const BasicJson& j) {
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    throw ConfigError("coefficients are integers or \"p/q\" strings");
}

ParamTail tail_from_json(const BasicJson& j) {
    const auto& coords = require_member(j, "coords");
    if (!coords.is_array() || coords.empty()) {
        throw ConfigError("\"coords\" must be a nonempty array of coefficient lists");
    }
    ParamTail tail;
    for (const auto& poly_json : coords) {
        if (!poly_json.is_array()) {
            throw ConfigError("each coordinate is a coefficient list, ascending degree");
        }
        Poly poly;
        for (const auto& coeff : poly_json) {
            poly.push_back(coefficient_from_json(coeff));
        }
        tail.coords.push_back(std::move(poly));
    }
    return tail;
}

}  // namespace

DualGraph graph_from_json(const nlohmann::json& j) {
    const int n = require_int(require_member(j, "n"), "\"n\"");
    const int k = require_int(require_member(j, "k"), "\"k\"");

    const auto& vertices_json = require_member(j, "vertices");
    if (!vertices_json.is_array()) {
        throw ConfigError("\"vertices\" must be an array");
    }
    std::vector<Vertex> vertices;
    for (const auto& vj : vertices_json) {
        Vertex v;
        v.id = require_string(require_member(vj, "id"), "vertex \"id\"");
        v.genus = require_int(require_member(vj, "genus"), "vertex \"genus\"");
        const auto& deg = require_member(vj, "degree");
        if (!deg.is_number_integer()) {
            throw ConfigError("vertex \"degree\" must be an integer");
        }
        v.degree = deg.get<std::int64_t>();
        if (vj.contains("marks")) {
            const auto& marks = vj.at("marks");
            if (!marks.is_array()) {
                throw ConfigError("vertex \"marks\" must be an array of integers");
            }
            for (const auto& mark : marks) {
                const int label = require_int(mark, "mark label");
                if (!v.marks.insert(label).second) {
                    throw ConfigError("mark " + std::to_string(label) +
                                      " repeats inside vertex '" + v.id + "'");
                }
            }
        }
        vertices.push_back(std::move(v));
    }

    const auto& edges_json = require_member(j, "edges");
    if (!edges_json.is_array()) {
        throw ConfigError("\"edges\" must be an array of id pairs");
    }
    std::vector<Edge> edges;
    for (const auto& ej : edges_json) {
        if (!ej.is_array() || ej.size() != 2) {
            throw ConfigError("each edge is a two-element array of vertex ids");
        }
        edges.push_back({require_string(ej.at(0), "edge endpoint"),
                         require_string(ej.at(1), "edge endpoint")});
    }
    return make_graph(n, k, std::move(vertices), std::move(edges));
}

Json graph_to_json(const DualGraph& g) {
    Json j;
    j["n"] = g.n;
    j["k"] = g.k;
    j["vertices"] = Json::array();
    for (const auto& v : g.vertices) {
        Json vj;
        vj["id"] = v.id;
        vj["genus"] = v.genus;
        vj["degree"] = v.degree;
        vj["marks"] = Json(v.marks);
        j["vertices"].push_back(std::move(vj));
    }
    j["edges"] = Json::array();
    for (const auto& e : g.edges) {
        j["edges"].push_back(Json::array({e.a, e.b}));
    }
    return j;
}

DualGraph graph_from_string(const std::string& text) {
    BasicJson j;
    try {
        j = BasicJson::parse(text);
    } catch (const BasicJson::parse_error& err) {
        throw ConfigError(std::string("unreadable JSON: ") + err.what());
    }
    return graph_from_json(j);
}

std::string graph_to_string(const DualGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

Json validation_report_to_json(const ValidationReport& report) {
    Json j = Json::array();
    for (const auto& issue : report) {
        Json item;
        item["kind"] = issue.kind == IssueKind::structural ? "structural" : "invariant";
        item["code"] = issue.code;
        item["detail"] = issue.detail;
        j.push_back(std::move(item));
    }
    return j;
}

Json stratum_to_json(const StratumIndex& idx, const ModuliContext& ctx) {
    Json j;
    j["m_prime"] = idx.m_prime;
    j["mu"] = Json(idx.mu);
    j["S"] = Json(idx.S);
    j["m"] = idx.m();
    j["dim"] = stratum_dimension(idx, ctx);
    j["dimension_obstructed"] = dimension_obstructed(idx, ctx);
    j["generically_in_main"] = generically_in_main(idx, ctx);
    return j;
}

Json schedule_to_json(const BlowupSchedule& schedule) {
    Json j = Json::array();
    for (const auto& stage : schedule.stages) {
        Json sj;
        sj["m"] = stage.m;
        sj["note"] = stage.note;
        sj["strata"] = Json::array();
        for (const auto& idx : stage.strata) {
            sj["strata"].push_back(stratum_to_json(idx, schedule.ctx));
        }
        j.push_back(std::move(sj));
    }
    return j;
}

SmoothConfig smooth_config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ConfigError("a smoothability config is a JSON object");
    }
    SmoothConfig cfg;
    if (j.contains("n")) {
        cfg.n = require_int(j.at("n"), "\"n\"");
    }
    if (j.contains("graph")) {
        cfg.graph = graph_from_json(j.at("graph"));
    }
    if (!cfg.n.has_value() && !cfg.graph.has_value()) {
        throw ConfigError("config needs \"graph\" or \"n\" to fix the target dimension");
    }
    if (j.contains("tails")) {
        const auto& tails_json = j.at("tails");
        if (!tails_json.is_array()) {
            throw ConfigError("\"tails\" must be an array");
        }
        for (const auto& tj : tails_json) {
            std::string edge;
            if (tj.is_object() && tj.contains("edge")) {
                edge = require_string(tj.at("edge"), "tail \"edge\"");
            }
            cfg.tails.emplace_back(std::move(edge), tail_from_json(tj));
        }
    }
    return cfg;
}

SmoothConfig smooth_config_from_string(const std::string& text) {
    BasicJson j;
    try {
        j = BasicJson::parse(text);
    } catch (const BasicJson::parse_error& err) {
        throw ConfigError(std::string("unreadable JSON: ") + err.what());
    }
    return smooth_config_from_json(j);
}

Json verdict_to_json(const SmoothabilityVerdict& verdict) {
    Json j;
    j["smoothable"] = verdict.smoothable;
    j["case"] = verdict.smooth_case == SmoothCase::no_contracted_curve ? "i" : "ii";
    if (verdict.tangent_rank.has_value()) {
        j["rank"] = *verdict.tangent_rank;
    } else {
        j["rank"] = nullptr;
    }
    j["m"] = verdict.m;
    Json cert;
    switch (verdict.certificate.type) {
        case Certificate::Type::none:
            cert["type"] = "none";
            break;
        case Certificate::Type::dependence: {
            cert["type"] = "dependence";
            Json coeffs = Json::array();
            for (const auto& c : verdict.certificate.dependence) {
                coeffs.push_back(format_rational(c));
            }
            cert["coefficients"] = std::move(coeffs);
            break;
        }
        case Certificate::Type::independent:
            cert["type"] = "independent";
            cert["pivot_cols"] = Json(verdict.certificate.pivot_cols);
            break;
    }
    j["certificate"] = std::move(cert);
    return j;
}

Json branches_to_json(const DualGraph& g, const std::vector<ContractedSubcurve>& branches) {
    Json j;
    j["branches"] = Json::array();
    for (const auto& branch : branches) {
        Json bj;
        bj["vertices"] = Json(branch.vertices);
        bj["tail_count"] = tail_count(g, branch);
        j["branches"].push_back(std::move(bj));
    }
    j["separations"] = Json::array();
    for (std::size_t a = 0; a < branches.size(); ++a) {
        for (std::size_t b = a + 1; b < branches.size(); ++b) {
            Json sj;
            sj["a"] = a;
            sj["b"] = b;
            sj["stage"] = separation_stage(g, branches[a], branches[b]);
            j["separations"].push_back(std::move(sj));
        }
    }
    const auto maximal = maximal_contracted_subcurve(g);
    if (maximal.has_value()) {
        j["maximal"] = Json(maximal->vertices);
    } else {
        j["maximal"] = nullptr;
    }
    return j;
}

std::string branch_lattice_dot(const DualGraph& g,
                               const std::vector<ContractedSubcurve>& branches) {
    auto label = [&](const ContractedSubcurve& branch) {
        std::ostringstream out;
        out << "{";
        for (std::size_t i = 0; i < branch.vertices.size(); ++i) {
            if (i > 0) out << ",";
            out << branch.vertices[i];
        }
        out << "} / t=" << tail_count(g, branch);
        return out.str();
    };

    std::ostringstream out;
    out << "digraph branches {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (std::size_t i = 0; i < branches.size(); ++i) {
        out << "  b" << i << " [label=\"" << label(branches[i]) << "\"];\n";
    }
    for (std::size_t a = 0; a < branches.size(); ++a) {
        for (std::size_t b = 0; b < branches.size(); ++b) {
            if (a == b || !(branches[a].subset_of(branches[b])) ||
                branches[a] == branches[b]) {
                continue;
            }
            bool covered = true;
            for (std::size_t mid = 0; mid < branches.size(); ++mid) {
                if (mid == a || mid == b) continue;
                if (branches[a].subset_of(branches[mid]) &&
                    branches[mid].subset_of(branches[b])) {
                    covered = false;
                    break;
                }
            }
            if (covered) {
                out << "  b" << a << " -> b" << b << ";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace tailocus

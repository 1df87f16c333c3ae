#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tailocus {

// One irreducible component of a nodal genus-1 k-marked curve.
struct Vertex {
    std::string id;
    int genus = 0;                 // 0 or 1; total genus 1 forbids more
    std::int64_t degree = 0;       // degree of the map on this component
    std::set<int> marks;           // labels from {1..k}

    bool operator==(const Vertex&) const = default;
};

// A node of the curve: an unordered pair of component ids. Parallel edges
// are distinct nodes and are told apart by their index in DualGraph::edges;
// ("v","v") is a self-node of an irreducible component.
struct Edge {
    std::string a;
    std::string b;

    bool operator==(const Edge&) const = default;
};

// Multigraph model of a prestable genus-1 k-marked curve mapping to
// projective n-space with total degree d.
struct DualGraph {
    int n = 1;
    int k = 0;
    std::int64_t d = 0;            // total degree; Σ vertex degrees must equal it
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    const Vertex* find_vertex(std::string_view id) const;
};

// Builds a graph with d set to the vertex degree sum (the usual case; the
// JSON interchange format carries no explicit d).
DualGraph make_graph(int n, int k, std::vector<Vertex> vertices, std::vector<Edge> edges);

enum class IssueKind {
    structural,   // malformed data: unknown ids, duplicate ids, duplicate marks
    invariant,    // a well-formed graph violating a modeling invariant
};

struct ValidationIssue {
    IssueKind kind;
    std::string code;      // stable machine-readable tag, e.g. "stability"
    std::string detail;    // human-readable, names the offending vertex/edge

    bool operator==(const ValidationIssue&) const = default;
};

using ValidationReport = std::vector<ValidationIssue>;

// Lists every violated invariant (empty report == valid graph). Structural
// errors short-circuit the invariant checks: a graph whose edges point at
// unknown vertices has no meaningful genus or stability to speak of.
//
// Invariant codes: "vertex-genus", "vertex-degree", "connectivity",
// "arithmetic-genus", "degree-sum", "degree-positive", "marks-partition",
// "stability". Structural codes: "empty-graph", "duplicate-vertex-id",
// "unknown-vertex-in-edge", "duplicate-mark", "header".
ValidationReport validate(const DualGraph& g);

bool is_valid(const DualGraph& g);

// Σ vertex genus + b1, with b1 = #edges - #vertices + 1. Requires a
// connected nonempty graph (throws std::invalid_argument otherwise);
// other invariants may fail freely.
std::int64_t arithmetic_genus(const DualGraph& g);

// A connected union of degree-0 components of arithmetic genus 1, declared
// contracted. Vertex ids are kept sorted and unique; subcurves compare by
// size first, then lexicographically, which is the canonical enumeration
// order everywhere in the library.
struct ContractedSubcurve {
    std::vector<std::string> vertices;

    bool contains(std::string_view id) const;
    bool subset_of(const ContractedSubcurve& other) const;
    bool operator==(const ContractedSubcurve&) const = default;
};

// Canonical (size, lex) order.
bool subcurve_less(const ContractedSubcurve& lhs, const ContractedSubcurve& rhs);

// Normalizes an id list into a ContractedSubcurve (sorts, deduplicates).
ContractedSubcurve make_subcurve(std::vector<std::string> ids);

// The three admissibility conditions: every vertex has degree 0, the induced
// subgraph is connected, and the induced arithmetic genus is 1. An empty set
// or an id not in the graph is inadmissible.
bool is_admissible_subcurve(const DualGraph& g, const ContractedSubcurve& e);

// An edge joining the subcurve to its complement. In a valid genus-1 graph
// the outside endpoints of distinct cross-edges are distinct vertices, so
// `outside` names the cross-edge unambiguously.
struct CrossEdge {
    std::size_t edge_index;
    std::string inside;
    std::string outside;
};

std::vector<CrossEdge> cross_edges(const DualGraph& g, const ContractedSubcurve& e);

// The join of all admissible contracted subcurves, or nullopt when none
// exists (the map contracts no genus-1 curve). Requires a valid graph.
std::optional<ContractedSubcurve> maximal_contracted_subcurve(const DualGraph& g);

}  // namespace tailocus

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tailocus/dualgraph.hpp"
#include "tailocus/ratlinalg.hpp"
#include "tailocus/rational.hpp"

namespace tailocus {

// Univariate polynomial over Q, coefficients in ascending degree.
using Poly = std::vector<Rational>;

// Chart-local parametrization of a rational tail near its attachment point:
// n coordinate polynomials in the parameter t, attachment at t = 0.
struct ParamTail {
    std::vector<Poly> coords;
};

// Throws ConfigError unless the tail has exactly n coordinates and at least
// one of them is nonconstant (a constant tail would be contracted).
void check_param_tail(const ParamTail& tail, int n);

// The images of the tails' tangent lines at the attachment point.
struct TangentConfig {
    int n = 1;
    RatMatrix vectors;   // m rows of length n
};

// Common value of the coordinates at t = 0, i.e. the chart image of the
// contracted curve. Throws ConfigError when the tails disagree ("tails do
// not meet at a common point") or the list is empty.
RatVector shared_attachment_point(const std::vector<ParamTail>& tails);

// Coefficient of t^1 in each coordinate. The zero vector is legal output:
// it encodes a critical point (cusp) of the parametrization at t = 0, and
// higher-order vanishing like (t^3, t^4) lands there too.
RatVector tangent_vector(const ParamTail& tail);

// Exact rank of the m x n tangent matrix.
std::size_t rank(const TangentConfig& cfg);

enum class SmoothCase {
    no_contracted_curve,   // (i): nothing contracted, always smoothable
    contracted_curve,      // (ii): decided by tangent dependence
};

struct Certificate {
    enum class Type { none, dependence, independent };
    Type type = Type::none;
    RatVector dependence;                  // Type::dependence: Σ c_i v_i = 0, c != 0
    std::vector<std::size_t> pivot_cols;   // Type::independent: columns of a full-rank minor
};

struct SmoothabilityVerdict {
    bool smoothable = false;
    SmoothCase smooth_case = SmoothCase::no_contracted_curve;
    std::optional<std::size_t> tangent_rank;   // absent in case (i)
    std::size_t m = 0;                         // nodes E ∩ C'; 0 in case (i)
    Certificate certificate;
    std::vector<std::string> tail_order;       // edge names, certificate row order
};

// The smoothability criterion on an explicit configuration. `tails` maps
// each cross-edge of the maximal contracted subcurve, named by the vertex
// id on its non-contracted side, to the parametrization of that branch.
//
// No contracted genus-1 subcurve: case (i), smoothable, and `tails` must be
// empty. Otherwise case (ii): smoothable iff the tangent vectors are
// dependent (rank < m). Only nodes count toward m here; marked points on
// the contracted curve impose no tangent condition.
//
// Throws ConfigError on missing/extra/malformed tails or mismatched
// attachment points. The graph is assumed valid.
SmoothabilityVerdict is_smoothable(const DualGraph& g,
                                   const std::map<std::string, ParamTail>& tails);

// Case-(ii) check on bare tails, for configurations given without a graph:
// the tails are taken to be the complete set of branches at a contracted
// elliptic curve. Rows keep the input order.
SmoothabilityVerdict smoothability_from_tails(int n, const std::vector<ParamTail>& tails);

}  // namespace tailocus

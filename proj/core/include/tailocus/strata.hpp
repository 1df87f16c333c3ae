#pragma once

#include <cstdint>
#include <vector>

namespace tailocus {

// The ambient moduli problem: genus-1 k-marked maps of degree d to
// projective n-space.
struct ModuliContext {
    int n = 1;
    std::int64_t d = 1;
    int k = 0;

    bool operator==(const ModuliContext&) const = default;
};

// Throws std::invalid_argument unless n >= 1, d >= 1, k >= 0.
void check_context(const ModuliContext& ctx);

// Index of one component of the m-tail locus: a contracted elliptic curve
// carrying the marks S, meeting m_prime rational tails whose degrees form
// the partition mu of d. The total tail count is m = m_prime + |S|.
struct StratumIndex {
    int m_prime = 1;
    std::vector<std::int64_t> mu;   // exactly m_prime parts, descending, each >= 1
    std::vector<int> S;             // ascending subset of {1..k}

    int m() const { return m_prime + static_cast<int>(S.size()); }
    bool operator==(const StratumIndex&) const = default;
};

// Canonical order: m_prime descending, then mu lexicographically descending,
// then S lexicographically ascending.
bool stratum_less(const StratumIndex& lhs, const StratumIndex& rhs);

// All partitions of d into exactly `parts` parts >= 1, each stored
// descending, listed in lexicographically descending order.
std::vector<std::vector<std::int64_t>> partitions_into_parts(std::int64_t d, int parts);

// Every stratum with tail count exactly m, in canonical order.
// Throws std::invalid_argument for m < 1 or an invalid context.
std::vector<StratumIndex> enumerate_strata(const ModuliContext& ctx, int m);

// m + n + (n+1)d - 2 m': the m-pointed genus-1 moduli, the image point of
// the contracted curve, and per degree-d_i tail the one-pointed rational
// maps through a fixed point ((n+1)d_i - 2 each).
std::int64_t stratum_dimension(const StratumIndex& idx, const ModuliContext& ctx);

// (n+1)d + k, the expected dimension of the main component.
std::int64_t main_dimension(const ModuliContext& ctx);

// True when the open locus of maps from smooth curves is empty: a degree-1
// map from a smooth genus-1 curve would be an isomorphism onto a rational
// curve. The dimension formulas stay well defined; callers surface this as
// a warning.
bool main_locus_empty(const ModuliContext& ctx);

// A stratum of dimension >= the irreducible main component cannot lie in
// its closure; equality counts as obstructed.
bool dimension_obstructed(const StratumIndex& idx, const ModuliContext& ctx);

// True iff m_prime > n: that many generic tangent directions in n-space are
// dependent, so the generic point of the stratum is smoothable.
bool generically_in_main(const StratumIndex& idx, const ModuliContext& ctx);

}  // namespace tailocus

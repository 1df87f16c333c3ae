#include "tailocus/strata.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tailocus {

void check_context(const ModuliContext& ctx) {
    if (ctx.n < 1 || ctx.d < 1 || ctx.k < 0) {
        throw std::invalid_argument("need n >= 1, d >= 1, k >= 0; got n = " +
                                    std::to_string(ctx.n) + ", d = " +
                                    std::to_string(ctx.d) + ", k = " +
                                    std::to_string(ctx.k));
    }
}

bool stratum_less(const StratumIndex& lhs, const StratumIndex& rhs) {
    if (lhs.m_prime != rhs.m_prime) return lhs.m_prime > rhs.m_prime;
    if (lhs.mu != rhs.mu) return lhs.mu > rhs.mu;
    return lhs.S < rhs.S;
}

namespace {

void partitions_rec(std::int64_t remaining, int parts_left, std::int64_t max_part,
                    std::vector<std::int64_t>& acc,
                    std::vector<std::vector<std::int64_t>>& out) {
    if (parts_left == 0) {
        if (remaining == 0) out.push_back(acc);
        return;
    }
    // next part p: small enough to leave >= 1 per remaining slot, large
    // enough that parts_left copies still reach the total
    const std::int64_t hi = std::min<std::int64_t>(max_part, remaining - (parts_left - 1));
    for (std::int64_t p = hi; p >= 1; --p) {
        if (p * parts_left < remaining) break;
        acc.push_back(p);
        partitions_rec(remaining - p, parts_left - 1, p, acc, out);
        acc.pop_back();
    }
}

void subsets_rec(int from, int k, int want, std::vector<int>& acc,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(acc.size()) == want) {
        out.push_back(acc);
        return;
    }
    for (int i = from; i <= k; ++i) {
        acc.push_back(i);
        subsets_rec(i + 1, k, want, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::int64_t>> partitions_into_parts(std::int64_t d, int parts) {
    std::vector<std::vector<std::int64_t>> out;
    if (parts < 1 || d < parts) return out;
    std::vector<std::int64_t> acc;
    partitions_rec(d, parts, d, acc, out);
    return out;
}

std::vector<StratumIndex> enumerate_strata(const ModuliContext& ctx, int m) {
    check_context(ctx);
    if (m < 1) {
        throw std::invalid_argument("tail count m must be >= 1, got " + std::to_string(m));
    }
    std::vector<StratumIndex> out;
    const int top = static_cast<int>(std::min<std::int64_t>(m, ctx.d));
    for (int m_prime = top; m_prime >= 1; --m_prime) {
        const int marks = m - m_prime;
        if (marks > ctx.k) continue;
        std::vector<std::vector<int>> subsets;
        std::vector<int> acc;
        subsets_rec(1, ctx.k, marks, acc, subsets);
        for (const auto& mu : partitions_into_parts(ctx.d, m_prime)) {
            for (const auto& S : subsets) {
                StratumIndex idx;
                idx.m_prime = m_prime;
                idx.mu = mu;
                idx.S = S;
                out.push_back(std::move(idx));
            }
        }
    }
    return out;
}

std::int64_t stratum_dimension(const StratumIndex& idx, const ModuliContext& ctx) {
    std::int64_t degree = 0;
    for (std::int64_t part : idx.mu) degree += part;
    return idx.m() + ctx.n + (ctx.n + 1) * degree - 2 * idx.m_prime;
}

std::int64_t main_dimension(const ModuliContext& ctx) {
    return (ctx.n + 1) * ctx.d + ctx.k;
}

bool main_locus_empty(const ModuliContext& ctx) { return ctx.d == 1; }

bool dimension_obstructed(const StratumIndex& idx, const ModuliContext& ctx) {
    return stratum_dimension(idx, ctx) >= main_dimension(ctx);
}

bool generically_in_main(const StratumIndex& idx, const ModuliContext& ctx) {
    return idx.m_prime > ctx.n;
}

}  // namespace tailocus

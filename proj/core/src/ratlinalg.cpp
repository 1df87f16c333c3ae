#include "tailocus/ratlinalg.hpp"

#include <algorithm>
#include <utility>

namespace tailocus {

namespace {

using IntMatrix = std::vector<std::vector<Int>>;

// Clearing each row's denominators is a row scaling, so the rank survives.
IntMatrix to_integer_rows(const RatMatrix& rows) {
    IntMatrix out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        Int lcm_den = 1;
        for (const auto& x : row) lcm_den = lcm(lcm_den, denominator(x));
        std::vector<Int> cleared;
        cleared.reserve(row.size());
        for (const auto& x : row) cleared.push_back(numerator(x) * (lcm_den / denominator(x)));
        out.push_back(std::move(cleared));
    }
    return out;
}

// Reduced row echelon form in place; returns the pivot column list.
std::vector<std::size_t> rref(RatMatrix& a) {
    std::vector<std::size_t> pivots;
    if (a.empty() || a[0].empty()) return pivots;
    const std::size_t m = a.size();
    const std::size_t n = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[r]);
        const Rational inv = a[r][c];
        for (std::size_t j = c; j < n; ++j) a[r][j] /= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational factor = a[i][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= factor * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

RatMatrix transpose(const RatMatrix& a) {
    if (a.empty() || a[0].empty()) return {};
    RatMatrix t(a[0].size(), RatVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    }
    return t;
}

}  // namespace

std::size_t exact_rank(const RatMatrix& rows) {
    if (rows.empty() || rows[0].empty()) return 0;
    auto a = to_integer_rows(rows);
    const std::size_t m = a.size();
    const std::size_t n = a[0].size();
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[r]);
        // Bareiss step: the division by the previous pivot is exact, so the
        // entries stay integers and stay small
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::vector<std::size_t> pivot_columns(const RatMatrix& rows) {
    RatMatrix a = rows;
    return rref(a);
}

std::optional<RatVector> row_dependence(const RatMatrix& rows) {
    if (rows.empty()) return std::nullopt;
    const std::size_t m = rows.size();

    // Left null space of the matrix = null space of its transpose. Columns
    // of the transpose correspond to the original rows.
    RatMatrix t = transpose(rows);
    if (t.empty()) {
        // zero-width rows: any single row is the zero vector of Q^0
        RatVector c(m, 0);
        c[0] = 1;
        return c;
    }
    const auto pivots = rref(t);
    if (pivots.size() == m) return std::nullopt;

    std::size_t free_col = 0;
    while (free_col < m &&
           std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) {
        ++free_col;
    }
    RatVector c(m, 0);
    c[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] < free_col) c[pivots[i]] = -t[i][free_col];
    }
    return canonicalize_rational_vector(c);
}

}  // namespace tailocus

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tailocus/rational.hpp"

namespace tailocus {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;   // list of rows, rectangular

// Exact rank over Q. Rows are scaled to integers (rank-preserving) and
// reduced by fraction-free Bareiss elimination, so no rational division
// happens in the pivot loop.
std::size_t exact_rank(const RatMatrix& rows);

// Pivot column indices (0-based) of the reduced row echelon form. Their
// count equals the rank; when the rank equals the row count they exhibit a
// full-rank minor.
std::vector<std::size_t> pivot_columns(const RatMatrix& rows);

// A nonzero c with Σ c_i row_i = 0, canonicalized to coprime integers with
// positive leading coefficient, or nullopt when the rows are independent.
// The certificate picks the first free row of the transposed system, so the
// result is deterministic.
std::optional<RatVector> row_dependence(const RatMatrix& rows);

}  // namespace tailocus

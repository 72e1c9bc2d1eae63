#pragma once

// Exact Gaussian elimination over Q[sqrt(-1)].

#include <cstddef>
#include <optional>
#include <vector>

#include "symidem/scalars.hpp"

namespace symidem {

using Vector = std::vector<GaussRational>;
using Matrix = std::vector<Vector>;  // row-major; all rows the same length

/// Row rank.
std::size_t rank(Matrix rows);

/// dim(rowspace(a) intersect rowspace(b)) = rank a + rank b - rank [a; b].
std::size_t intersection_dimension(const Matrix& a, const Matrix& b);

/// Coefficients c with sum_j c_j * columns[j] == rhs, or nullopt if rhs is not in
/// the span. With dependent columns some solution is returned (free variables 0).
std::optional<Vector> solve(const Matrix& columns, const Vector& rhs);

}  // namespace symidem

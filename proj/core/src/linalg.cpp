#include "symidem/linalg.hpp"

#include <utility>

#include "symidem/errors.hpp"

namespace symidem {

namespace {

// Reduces rows in place to row echelon form; returns pivot columns in order.
std::vector<std::size_t> echelon(Matrix& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const GaussRational inv = rows[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) rows[r][k] *= inv;
    for (std::size_t q = r + 1; q < rows.size(); ++q) {
      if (rows[q][c].is_zero()) continue;
      const GaussRational factor = rows[q][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!rows[r][k].is_zero()) rows[q][k] -= factor * rows[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void check_rectangular(const Matrix& rows) {
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) throw ArgumentError("ragged matrix");
  }
}

}  // namespace

std::size_t rank(Matrix rows) {
  check_rectangular(rows);
  return echelon(rows).size();
}

std::size_t intersection_dimension(const Matrix& a, const Matrix& b) {
  Matrix both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank(a) + rank(b) - rank(std::move(both));
}

std::optional<Vector> solve(const Matrix& columns, const Vector& rhs) {
  const std::size_t unknowns = columns.size();
  const std::size_t equations = rhs.size();
  for (const auto& col : columns) {
    if (col.size() != equations) throw ArgumentError("solve: column length mismatch");
  }
  // Augmented system [columns | rhs], one row per equation.
  Matrix aug(equations, Vector(unknowns + 1));
  for (std::size_t i = 0; i < equations; ++i) {
    for (std::size_t j = 0; j < unknowns; ++j) aug[i][j] = columns[j][i];
    aug[i][unknowns] = rhs[i];
  }
  const auto pivots = echelon(aug);
  if (!pivots.empty() && pivots.back() == unknowns) return std::nullopt;

  Vector x(unknowns);
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t c = pivots[r];
    GaussRational value = aug[r][unknowns];
    for (std::size_t k = c + 1; k < unknowns; ++k) {
      if (!aug[r][k].is_zero()) value -= aug[r][k] * x[k];
    }
    x[c] = value;
  }
  return x;
}

}  // namespace symidem

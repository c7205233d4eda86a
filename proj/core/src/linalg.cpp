#include "drinfeld/linalg.hpp"

#include <stdexcept>

namespace drinfeld {

LinearSolve solve_linear(const std::vector<std::vector<RatFunc>>& columns,
                         const std::vector<RatFunc>& target) {
  const std::size_t ncols = columns.size();
  const std::size_t nrows = target.size();
  for (const auto& col : columns)
    if (col.size() != nrows)
      throw std::invalid_argument("column/target dimension mismatch");
  if (nrows < ncols)
    throw std::invalid_argument("system has fewer rows than columns");

  // working matrix: rows of [columns | target]
  std::vector<std::vector<RatFunc>> m;
  m.reserve(nrows);
  for (std::size_t r = 0; r < nrows; ++r) {
    std::vector<RatFunc> row;
    row.reserve(ncols + 1);
    for (std::size_t c = 0; c < ncols; ++c) row.push_back(columns[c][r]);
    row.push_back(target[r]);
    m.push_back(std::move(row));
  }

  std::vector<bool> row_used(nrows, false);
  std::vector<std::size_t> pivot_row(ncols, 0);

  LinearSolve out;
  for (std::size_t c = 0; c < ncols; ++c) {
    // pivot of minimal numerator+denominator degree
    std::optional<std::size_t> best;
    int best_size = 0;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (row_used[r] || m[r][c].is_zero()) continue;
      const int size = m[r][c].num().deg() + m[r][c].den().deg();
      if (!best || size < best_size) {
        best = r;
        best_size = size;
      }
    }
    if (!best) {
      out.status = LinearSolve::Status::rank_deficient;
      out.witness_col = c;
      return out;
    }
    const std::size_t pr = *best;
    row_used[pr] = true;
    pivot_row[c] = pr;
    const RatFunc pivinv = m[pr][c].inverse();
    for (std::size_t j = c; j <= ncols; ++j) m[pr][j] = m[pr][j] * pivinv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == pr || m[r][c].is_zero()) continue;
      const RatFunc factor = m[r][c];
      for (std::size_t j = c; j <= ncols; ++j)
        m[r][j] = m[r][j] - factor * m[pr][j];
    }
  }

  // every non-pivot row must have been annihilated
  for (std::size_t r = 0; r < nrows; ++r) {
    if (row_used[r]) continue;
    if (!m[r][ncols].is_zero()) {
      out.status = LinearSolve::Status::inconsistent;
      out.witness_row = r;
      return out;
    }
  }

  out.solution.reserve(ncols);
  for (std::size_t c = 0; c < ncols; ++c)
    out.solution.push_back(m[pivot_row[c]][ncols]);
  return out;
}

} // namespace drinfeld

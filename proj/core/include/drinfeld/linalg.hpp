#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "drinfeld/ratfunc.hpp"

namespace drinfeld {

/// Outcome of an exact linear solve over K.
struct LinearSolve {
  enum class Status { solved, inconsistent, rank_deficient };

  Status status = Status::solved;
  std::vector<RatFunc> solution;          // valid iff solved
  std::optional<std::size_t> witness_row; // first inconsistent row (0-based)
  std::optional<std::size_t> witness_col; // pivotless column if rank deficient

  bool ok() const { return status == Status::solved; }
};

/// Solve sum_j x_j * columns[j] = target exactly by Gaussian elimination
/// over K.  Pivots are chosen to minimize deg(num) + deg(den) of the pivot
/// entry, which keeps coefficient growth down.  A unique solution is
/// returned when the columns are independent and the target lies in their
/// span; otherwise the failure carries the first inconsistent row, or the
/// column for which no pivot could be found.
LinearSolve solve_linear(const std::vector<std::vector<RatFunc>>& columns,
                         const std::vector<RatFunc>& target);

} // namespace drinfeld

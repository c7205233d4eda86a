#pragma once

#include <optional>
#include <vector>

#include "drinfeld/series.hpp"

namespace drinfeld {

/// Exponent pairs (i, j) with (q-1)i + (q+1)j = k and j = m mod (q-1):
/// the monomials g^i h^j spanning M_{k,m} under the structure theorem
/// M = C[g, h].  Ordered by increasing j.
std::vector<std::pair<unsigned, unsigned>> basis_monomials(const FqPtr& f,
                                                           unsigned k, unsigned m);

/// Result of expressing a u-expansion in the g-h monomial basis.
struct BasisSolution {
  unsigned k = 0;
  unsigned m = 0;
  std::vector<std::pair<unsigned, unsigned>> monomials;
  bool success = false;
  std::vector<RatFunc> coefficients;        // aligned with monomials
  std::optional<unsigned> residual_row;     // first inconsistent u-exponent

  /// True when every monomial carrying a nonzero coefficient has j >= 1.
  bool cuspidal() const;
};

/// Match every stored coefficient of f against the expansions of the
/// basis monomials of M_{k,m} at the same precision; success means the
/// exact solve has zero residual through prec(f).  Refuses to work below
/// prec(f) >= 2 * dim * (q+1), where under-determined solves could give
/// false positives.
BasisSolution express(const USeries& f, unsigned k, unsigned m,
                      unsigned threads = 1);

/// Order of vanishing at the cusp: least stored exponent with a nonzero
/// coefficient, or nullopt when that is beyond the stored precision.
std::optional<unsigned> ord_at_infinity(const USeries& f);

} // namespace drinfeld

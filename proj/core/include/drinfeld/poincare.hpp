#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/absval.hpp"
#include "drinfeld/fq.hpp"

namespace drinfeld {

/// Valuation certificate for the non-vanishing of the Drinfeld-Poincare
/// series P_{k,n} at xi_N = T^(1/N): the dominant part S1 = -G_n(u(xi_N))
/// is evaluated exactly on absolute values, the remaining parts S2 and S3
/// only through the upper bounds their term estimates give, and the
/// verdict is certified exactly when the S1 terms have pairwise distinct
/// values (so the ultrametric max is attained) and |S1| strictly exceeds
/// every bound.  The S3 estimate appears in two readings of the pi-adic
/// exponent, n + i(q-1) as printed and n - i(q-1) as in the parallel S1/S2
/// estimates; the default verdict requires beating both, which is safe
/// under either reading.
struct Certificate {
  unsigned q = 0;
  unsigned k = 0;
  unsigned n = 0;
  unsigned long long root_order = 0; // N

  std::vector<std::pair<unsigned, AbsVal>> gamma_abs; // (i, |gamma_i|), nonzero gaps
  std::vector<std::pair<unsigned, AbsVal>> s1_terms;  // (i, |gamma_i| |u(xi_N)|^(n-i(q-1)))
  AbsVal s1 = AbsVal::zero();
  bool distinct = false;
  AbsVal s2_bound = AbsVal::zero();
  AbsVal s3_bound_printed = AbsVal::zero();
  AbsVal s3_bound_variant = AbsVal::zero();

  bool certified_printed = false; // |S1| beats S2 and the printed S3 bound
  bool certified_variant = false; // |S1| beats S2 and the variant S3 bound
  bool certified = false;         // both readings

  std::string verdict() const { return certified ? "certified" : "inconclusive"; }
};

/// Run the valuation bookkeeping for P_{k,n}.  Preconditions (violations
/// are reported by name as std::domain_error): k = 2n mod (q-1),
/// 1 <= n <= k/(q+1), and N > n q (q-1) when given (default: the smallest
/// admissible integer n q (q-1) + 1).
Certificate certify_nonvanishing(const FqPtr& f, unsigned k, unsigned n,
                                 std::optional<unsigned long long> root_order =
                                     std::nullopt);

/// The binomial sum of the combinatorial lemma behind the hyperderivative
/// action on Poincare series:
///   sum_{r=0}^{w1} binom(w2+r, r) binom(w3-r, w1-r) = binom(w2+w3+1, w1),
/// exact integers, with binomials in the polynomial convention of
/// binom_gen (the identity fails under the all-zero convention once
/// w3 < w1; see the r = w1 boundary term binom(w3-w1, 0) = 1).
std::uint64_t lemma1_sum(unsigned w1, unsigned w2, unsigned w3);

} // namespace drinfeld

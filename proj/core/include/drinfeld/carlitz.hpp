#pragma once

#include <vector>

#include "drinfeld/ratfunc.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

/// The bracket/factorial data of the Carlitz module:
///   [i] = T^(q^i) - T,   D_0 = 1,  D_i = [i] * D_{i-1}^q,
/// and the Carlitz exponential coefficients alpha_i = 1/D_i, so that
///   e_C(z) = sum_i z^(q^i) / D_i.
struct CarlitzCoeffs {
  FqPtr field;
  std::vector<Poly> brackets; // brackets[i] = [i], index 0 unused (zero)
  std::vector<Poly> big_d;    // big_d[i] = D_i, big_d[0] = 1
  std::vector<RatFunc> alpha; // alpha[i] = 1/D_i

  unsigned max_index() const { return static_cast<unsigned>(big_d.size()) - 1; }

  static CarlitzCoeffs up_to(const FqPtr& f, unsigned imax);
};

/// Coefficients of the F_q-linear polynomial C_a(X) = sum c_i(a) X^(q^i),
/// the action of a under the Carlitz module; c_0(a) = a and c_d(a) is the
/// leading coefficient of a (d = deg a).
struct CarlitzPoly {
  Poly a;
  std::vector<Poly> coeffs;
};

/// Carlitz action polynomial of a nonzero a, from the recursion
/// c_i(T*b) = T*c_i(b) + c_{i-1}(b)^q seeded by C_T(X) = T*X + X^q and
/// extended F_q-linearly in a.
CarlitzPoly carlitz_poly(const Poly& a);

/// Truncation of e_C(z): coefficients alpha_i at the exponents q^i <= prec,
/// zero elsewhere.  The returned series lives in the variable z.
USeries exp_series(const FqPtr& f, unsigned prec);

/// The z^k coefficient of z/e_C(z), an exact element of K: equals
/// zeta_A(k)/pitilde^k for k a positive multiple of q-1 (see
/// docs/theory.md for the derivation).  Used to normalize Eisenstein
/// series without ever representing the period itself.
RatFunc zeta_ratio(const FqPtr& f, unsigned k);

} // namespace drinfeld

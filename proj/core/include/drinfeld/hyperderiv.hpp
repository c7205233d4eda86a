#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drinfeld/expansions.hpp"
#include "drinfeld/intmath.hpp"

namespace drinfeld {

/// Image of an A-expansion under the n-th hyperderivative D_n:
///   D_n (sum c_a G_w(u_a)) = binom(w+n-1, n) sum c_a a^n G_{w+n}(u_a),
/// so exponent w -> w+n, weight k -> k+2n, type m -> m+n.  The form stays
/// an A-expansion; whether it is still modular is decided by the Lucas
/// criterion on the source weight when that weight is known.
struct HyperResult {
  AExpansion image;
  unsigned order;                 // n
  std::optional<unsigned> weight; // k + 2n when the source weight k is known
  unsigned type;                  // (m + n) mod (q-1)
  std::optional<bool> modular;    // needs the source weight; always true for n = 0
  bool vanished;                  // the binomial scalar is 0 mod p
};

HyperResult hyper_derive(const AExpansion& f, unsigned n);
HyperResult hyper_derive(const NamedForm& f, unsigned n);

/// Parameters of the pairing between weights and the single-cuspidal
/// family: when k - 2n is a positive multiple of q-1 and
/// n <= p^val_p(k-n), then D_{n-1} f_s = f_{k,n} with s = (k-2n)/(q-1),
/// and f_{k,n} is cuspidal of weight k and type n.  Rejections name the
/// failed condition.
struct ThmMainParams {
  bool ok = false;
  unsigned s = 0;
  std::string rejection;
};

ThmMainParams thm_main_params(const FqPtr& f, unsigned k, unsigned n);

/// All 1 <= n <= n_max for which D_n of a weight-k0 form stays modular:
/// binom(k0 + n - 1, j) = 0 mod p for every 1 <= j <= n.
std::vector<unsigned> enumerate_modular(const FqPtr& f, unsigned k0, unsigned n_max);

/// Series-level first hyperderivative: D_1 is a derivation with D_1 u = u^2,
/// so sum b_i u^i maps to sum i b_i u^(i+1) (precision capped at prec(f)).
/// Independent of the A-expansion route, which makes it an oracle for
/// hyper_derive at order 1 and, iterated, for the whole family.
USeries d1_series_oracle(const USeries& f);

} // namespace drinfeld

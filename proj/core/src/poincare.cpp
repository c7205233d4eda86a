#include "drinfeld/poincare.hpp"

#include <stdexcept>

#include "drinfeld/goss.hpp"
#include "drinfeld/intmath.hpp"

namespace drinfeld {

Certificate certify_nonvanishing(const FqPtr& f, unsigned k, unsigned n,
                                 std::optional<unsigned long long> root_order) {
  const unsigned q = f->q();
  const unsigned qm1 = q - 1;
  if (k < 1 || n < 1) throw std::domain_error("k and n must be positive");
  if ((static_cast<long long>(k) - 2ll * n) % qm1 != 0)
    throw std::domain_error("k is not congruent to 2n mod (q-1)");
  if (static_cast<unsigned long long>(n) * (q + 1) > k)
    throw std::domain_error("n > k/(q+1)");
  const unsigned long long n_min = static_cast<unsigned long long>(n) * q * qm1;
  unsigned long long N = root_order.value_or(n_min + 1);
  if (N <= n_min)
    throw std::domain_error("root order N must exceed n*q*(q-1)");

  Certificate cert;
  cert.q = q;
  cert.k = k;
  cert.n = n;
  cert.root_order = N;

  const GossPoly g = goss_poly(f, n);
  // |u(xi_N)| = |pitilde|^(-1) |xi_N|^q = q^(-q/(q-1)) q^(q/N)
  const Rational u_exp = Rational(-static_cast<long long>(q), qm1) +
                         Rational(q, static_cast<long long>(N));
  const Rational pi_exp(q, qm1); // |pitilde| = q^(q/(q-1))

  for (const auto& [i, gamma] : g.gaps()) {
    const Rational gexp = abs_val(gamma).exponent();
    const long long x_exp = static_cast<long long>(n) -
                            static_cast<long long>(i) * qm1; // n - i(q-1) >= 1
    cert.gamma_abs.emplace_back(i, abs_val(gamma));
    cert.s1_terms.emplace_back(
        i, AbsVal::from_exponent(gexp + u_exp * Rational(x_exp)));

    const Rational xi_part(-(static_cast<long long>(k) - n +
                             static_cast<long long>(i) * qm1),
                           static_cast<long long>(N));
    const AbsVal s2_term = AbsVal::from_exponent(
        gexp - pi_exp * Rational(x_exp) + xi_part);
    const AbsVal s3_term_printed = AbsVal::from_exponent(
        gexp - pi_exp * Rational(static_cast<long long>(n) +
                                 static_cast<long long>(i) * qm1) +
        xi_part);
    cert.s2_bound = std::max(cert.s2_bound, s2_term);
    cert.s3_bound_printed = std::max(cert.s3_bound_printed, s3_term_printed);
    cert.s3_bound_variant = std::max(cert.s3_bound_variant, s2_term);
  }

  for (const auto& [i, v] : cert.s1_terms) cert.s1 = std::max(cert.s1, v);

  cert.distinct = true;
  for (std::size_t a = 0; a < cert.s1_terms.size() && cert.distinct; ++a)
    for (std::size_t b = a + 1; b < cert.s1_terms.size(); ++b)
      if (cert.s1_terms[a].second == cert.s1_terms[b].second) {
        cert.distinct = false;
        break;
      }

  cert.certified_printed =
      cert.distinct && cert.s1 > cert.s2_bound && cert.s1 > cert.s3_bound_printed;
  cert.certified_variant =
      cert.distinct && cert.s1 > cert.s2_bound && cert.s1 > cert.s3_bound_variant;
  cert.certified = cert.certified_printed && cert.certified_variant;
  return cert;
}

std::uint64_t lemma1_sum(unsigned w1, unsigned w2, unsigned w3) {
  // the w3 - r factor needs the polynomial convention once r passes w3;
  // under it the sum telescopes to binom(w2+w3+1, w1) >= 0 even though
  // individual terms may be negative
  __int128 acc = 0;
  for (unsigned r = 0; r <= w1; ++r) {
    const long long a = binom_gen(static_cast<long long>(w2) + r, r);
    const long long b = binom_gen(static_cast<long long>(w3) - r,
                                  static_cast<long long>(w1) - r);
    acc += static_cast<__int128>(a) * b;
  }
  if (acc < 0 || acc > static_cast<__int128>(UINT64_MAX))
    throw std::overflow_error("lemma sum does not fit in 64 bits");
  return static_cast<std::uint64_t>(acc);
}

} // namespace drinfeld

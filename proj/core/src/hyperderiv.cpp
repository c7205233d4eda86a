#include "drinfeld/hyperderiv.hpp"

#include <stdexcept>

namespace drinfeld {

HyperResult hyper_derive(const AExpansion& f, unsigned n) {
  const FqPtr& field = f.field();
  const unsigned p = field->p();

  if (n == 0)
    return HyperResult{f, 0, f.weight(), f.type(), true, f.scalar().is_zero()};

  const unsigned w = f.exponent();
  const unsigned binom = lucas_binom(w + n - 1, n, p);
  AExpansion image = f.twisted(n).scaled(RatFunc::from_int(field, binom));

  std::optional<bool> modular;
  if (f.weight()) {
    const unsigned k = *f.weight();
    bool mod = true;
    for (unsigned j = 1; j <= n; ++j)
      if (lucas_binom(k + n - 1, j, p) != 0) {
        mod = false;
        break;
      }
    modular = mod;
  }

  const unsigned qm1 = field->q() - 1;
  return HyperResult{std::move(image), n,
                     f.weight() ? std::optional<unsigned>(*f.weight() + 2 * n)
                                : std::nullopt,
                     (f.type() + n) % qm1, modular, binom == 0 || f.scalar().is_zero()};
}

HyperResult hyper_derive(const NamedForm& f, unsigned n) {
  if (f.constant_term)
    throw std::invalid_argument("hyperderivative is implemented for cuspidal A-expansions only");
  return hyper_derive(f.expansion, n);
}

ThmMainParams thm_main_params(const FqPtr& f, unsigned k, unsigned n) {
  ThmMainParams out;
  if (k < 1 || n < 1) {
    out.rejection = "k and n must be positive";
    return out;
  }
  const unsigned qm1 = f->q() - 1;
  if (k <= 2 * n || (k - 2 * n) % qm1 != 0) {
    out.rejection = "k - 2n is not a positive multiple of (q-1)";
    return out;
  }
  const unsigned p = f->p();
  const unsigned v = val_p(k - n, p);
  unsigned long long bound;
  try {
    bound = ipow(p, v);
  } catch (const std::overflow_error&) {
    bound = UINT64_MAX; // p^v certainly exceeds n
  }
  if (n > bound) {
    out.rejection = std::to_string(n) + " > " + std::to_string(p) + "^{val_" +
                    std::to_string(p) + "(" + std::to_string(k - n) +
                    ")} = " + std::to_string(bound);
    return out;
  }
  out.ok = true;
  out.s = (k - 2 * n) / qm1;
  return out;
}

std::vector<unsigned> enumerate_modular(const FqPtr& f, unsigned k0, unsigned n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  const unsigned p = f->p();
  std::vector<unsigned> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    bool ok = true;
    for (unsigned j = 1; j <= n; ++j)
      if (lucas_binom(k0 + n - 1, j, p) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(n);
  }
  return out;
}

USeries d1_series_oracle(const USeries& f) {
  const FqPtr& field = f.field();
  USeries out(field, f.prec());
  for (unsigned i = 1; i + 1 <= f.prec(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    out = out + USeries::monomial(field, i + 1,
                                  RatFunc::from_int(field, i) * f.coeff(i),
                                  f.prec());
  }
  return out;
}

} // namespace drinfeld

#pragma once

#include <random>

#include "drinfeld/poly.hpp"
#include "drinfeld/ratfunc.hpp"

namespace drinfeld::test {

using Rng = std::mt19937_64;

inline FqElem random_elem(Rng& rng, const FqPtr& f) {
  return static_cast<FqElem>(rng() % f->q());
}

inline Poly random_poly(Rng& rng, const FqPtr& f, unsigned max_deg) {
  const unsigned d = static_cast<unsigned>(rng() % (max_deg + 1));
  std::vector<FqElem> c(d + 1);
  for (auto& x : c) x = random_elem(rng, f);
  return Poly(f, std::move(c));
}

inline Poly random_nonzero_poly(Rng& rng, const FqPtr& f, unsigned max_deg) {
  for (;;) {
    Poly a = random_poly(rng, f, max_deg);
    if (!a.is_zero()) return a;
  }
}

inline RatFunc random_ratfunc(Rng& rng, const FqPtr& f, unsigned max_deg) {
  return RatFunc(random_poly(rng, f, max_deg),
                 random_nonzero_poly(rng, f, max_deg));
}

} // namespace drinfeld::test

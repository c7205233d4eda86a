#include "drinfeld/carlitz.hpp"

#include <stdexcept>

namespace drinfeld {

CarlitzCoeffs CarlitzCoeffs::up_to(const FqPtr& f, unsigned imax) {
  CarlitzCoeffs c;
  c.field = f;
  c.brackets.reserve(imax + 1);
  c.big_d.reserve(imax + 1);
  c.alpha.reserve(imax + 1);
  c.brackets.push_back(Poly::zero(f));
  c.big_d.push_back(Poly::one(f));
  c.alpha.push_back(RatFunc::one(f));
  unsigned long long qi = 1;
  for (unsigned i = 1; i <= imax; ++i) {
    qi *= f->q();
    if (qi > 2'000'000ull)
      throw std::invalid_argument("Carlitz bracket degree too large");
    // [i] = T^(q^i) - T
    std::vector<FqElem> v(qi + 1, 0);
    v[1] = f->from_int(-1);
    v[qi] = 1;
    c.brackets.emplace_back(f, std::move(v));
    c.big_d.push_back(c.brackets[i] * pow_char(c.big_d[i - 1], f->q()));
    c.alpha.push_back(RatFunc(Poly::one(f), c.big_d[i]));
  }
  return c;
}

CarlitzPoly carlitz_poly(const Poly& a) {
  if (a.is_zero()) throw std::invalid_argument("carlitz_poly of zero");
  const FqPtr& f = a.field();
  const unsigned d = static_cast<unsigned>(a.deg());
  // rows[j] = coefficients of C_{T^j}
  std::vector<Poly> row{Poly::one(f)};
  std::vector<Poly> out(d + 1, Poly::zero(f));
  for (unsigned j = 0; j <= d; ++j) {
    if (a.coeff(j) != 0)
      for (unsigned i = 0; i <= j; ++i)
        out[i] = out[i] + row[i].scaled(a.coeff(j));
    if (j == d) break;
    // next row: c_i(T^(j+1)) = T*c_i(T^j) + c_{i-1}(T^j)^q
    std::vector<Poly> next;
    next.reserve(j + 2);
    const Poly t = Poly::T(f);
    for (unsigned i = 0; i <= j + 1; ++i) {
      Poly v = Poly::zero(f);
      if (i <= j) v = v + t * row[i];
      if (i >= 1) v = v + pow_char(row[i - 1], f->q());
      next.push_back(std::move(v));
    }
    row = std::move(next);
  }
  return CarlitzPoly{a, std::move(out)};
}

USeries exp_series(const FqPtr& f, unsigned prec) {
  USeries s(f, prec);
  if (prec == 0) return s;
  unsigned imax = 0;
  unsigned long long qi = 1;
  while (qi * f->q() <= prec) {
    qi *= f->q();
    ++imax;
  }
  const CarlitzCoeffs c = CarlitzCoeffs::up_to(f, imax);
  qi = 1;
  USeries acc(f, prec);
  for (unsigned i = 0; qi <= prec; ++i) {
    acc = acc + USeries::monomial(f, static_cast<unsigned>(qi), c.alpha[i], prec);
    qi *= f->q();
  }
  return acc;
}

RatFunc zeta_ratio(const FqPtr& f, unsigned k) {
  const unsigned qm1 = f->q() - 1;
  if (k == 0 || k % qm1 != 0)
    throw std::domain_error("zeta_ratio requires k to be a positive multiple of q-1");
  // e_C(z)/z has coefficient alpha_i at z^(q^i - 1); invert and read z^k
  unsigned imax = 0;
  unsigned long long qi = 1;
  while (qi * f->q() - 1 <= k) {
    qi *= f->q();
    ++imax;
  }
  const CarlitzCoeffs c = CarlitzCoeffs::up_to(f, imax);
  USeries h(f, k);
  qi = 1;
  for (unsigned i = 0; qi - 1 <= k; ++i) {
    h = h + USeries::monomial(f, static_cast<unsigned>(qi - 1), c.alpha[i], k);
    qi *= f->q();
  }
  return invert(h).coeff(k);
}

} // namespace drinfeld

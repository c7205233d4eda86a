#pragma once

#include <optional>
#include <vector>

#include "drinfeld/ratfunc.hpp"

namespace drinfeld {

/// Truncated power series in the uniformizer u with coefficients in K.
/// Precision M means the coefficients of u^0 .. u^M are known exactly and
/// the tail is O(u^{M+1}).  Equality compares through the smaller of the
/// two precisions.
class USeries {
public:
  USeries(FqPtr field, unsigned prec);
  USeries(FqPtr field, unsigned prec, std::vector<RatFunc> coeffs);

  static USeries one(const FqPtr& f, unsigned prec);
  static USeries monomial(const FqPtr& f, unsigned e, const RatFunc& c, unsigned prec);

  const FqPtr& field() const { return field_; }
  unsigned prec() const { return prec_; }
  const RatFunc& coeff(unsigned i) const { return c_[i]; } // i <= prec
  const std::vector<RatFunc>& coeffs() const { return c_; }

  /// Least exponent with a nonzero stored coefficient; nullopt when every
  /// stored coefficient vanishes (order beyond precision).
  std::optional<unsigned> order() const;
  bool is_zero_through_prec() const { return !order().has_value(); }

  USeries truncated(unsigned new_prec) const; // new_prec <= prec
  USeries shifted(unsigned k) const;          // * u^k; precision grows by k

  USeries operator-() const;
  friend USeries operator+(const USeries& a, const USeries& b);
  friend USeries operator-(const USeries& a, const USeries& b);
  friend USeries operator*(const USeries& a, const USeries& b);
  friend USeries operator*(const RatFunc& c, const USeries& a);
  friend USeries operator*(long long c, const USeries& a);
  friend bool operator==(const USeries& a, const USeries& b);
  friend bool operator!=(const USeries& a, const USeries& b) { return !(a == b); }

private:
  FqPtr field_;
  unsigned prec_;
  std::vector<RatFunc> c_; // size prec_ + 1
};

/// Multiplicative inverse with f * invert(f) = 1 + O(u^{prec+1}); requires
/// a nonzero constant term.
USeries invert(const USeries& f);

USeries pow(const USeries& f, unsigned long long e);

/// P(s) for a polynomial P over K given by dense coefficients (index =
/// exponent), truncated at prec(s); Horner over series.  Requires
/// order(s) >= 1 so that composition needs no constant-term handling.
USeries eval_poly(const std::vector<RatFunc>& poly_coeffs, const USeries& s);

} // namespace drinfeld

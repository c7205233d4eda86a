#pragma once

#include <utility>
#include <vector>

#include "drinfeld/fq.hpp"

namespace drinfeld {

/// Dense polynomial in T over F_q, the ring A = F_q[T].  Canonical form has
/// no trailing zero coefficients; deg of the zero polynomial is the sentinel
/// -1.  Values are immutable in practice (all operations return new values)
/// and carry their field context.
class Poly {
public:
  explicit Poly(FqPtr field) : field_(std::move(field)) {}
  Poly(FqPtr field, std::vector<FqElem> coeffs)
      : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static Poly zero(const FqPtr& f) { return Poly(f); }
  static Poly one(const FqPtr& f) { return constant(f, 1); }
  static Poly constant(const FqPtr& f, FqElem c) {
    return Poly(f, std::vector<FqElem>{c});
  }
  static Poly from_int(const FqPtr& f, long long v) {
    return constant(f, f->from_int(v));
  }
  static Poly T(const FqPtr& f) { return Poly(f, {0, 1}); }
  static Poly monomial(const FqPtr& f, unsigned e, FqElem c = 1);

  const FqPtr& field() const { return field_; }
  /// Degree; -1 stands in for deg(0) = -infinity.
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  FqElem coeff(unsigned i) const { return i < c_.size() ? c_[i] : 0; }
  FqElem lc() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<FqElem>& coeffs() const { return c_; }

  Poly scaled(FqElem c) const;
  Poly shifted(unsigned k) const; // multiply by T^k
  Poly monic() const;             // scale so lc = 1; requires nonzero

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// (quotient, remainder) with deg r < deg b; throws on division by zero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  FqPtr field_;
  std::vector<FqElem> c_;
};

/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

Poly pow(const Poly& a, unsigned long long e);

/// a^(p^k) by coefficient Frobenius and exponent stretch; pk must be a
/// power of the field characteristic.
Poly pow_char(const Poly& a, unsigned long long pk);

/// All monic polynomials of degree d, in the canonical enumeration order:
/// lexicographic on the coefficient vector (a_{d-1}, ..., a_0) with
/// coordinates in numeric order, i.e. counting 0 .. q^d - 1 in base q.
std::vector<Poly> monic_polys(const FqPtr& f, unsigned d);

} // namespace drinfeld

#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

#include "drinfeld/ratfunc.hpp"

namespace drinfeld {

/// Exact rational number on 64-bit words; denominators stay tiny here
/// (valuation exponents), so no big-integer backing is needed.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num * b.num, a.den * b.den};
  }
  Rational operator-() const { return {-num, den}; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string to_string() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

/// Value of the absolute value |.| on K and its extensions: either 0 or
/// q^r with r rational, multiplicative, ultrametric.  Only the exponent is
/// stored; the base q is implicit from context.
class AbsVal {
public:
  static AbsVal zero() { return AbsVal(); }
  static AbsVal from_exponent(Rational r) {
    AbsVal v;
    v.zero_ = false;
    v.exp_ = r;
    return v;
  }

  bool is_zero() const { return zero_; }
  /// Exponent r of q^r; throws for the zero value.
  const Rational& exponent() const {
    if (zero_) throw std::domain_error("zero absolute value has no exponent");
    return exp_;
  }

  friend AbsVal operator*(const AbsVal& a, const AbsVal& b) {
    if (a.zero_ || b.zero_) return zero();
    return from_exponent(a.exp_ + b.exp_);
  }
  AbsVal pow(long long e) const {
    if (zero_) {
      if (e <= 0) throw std::domain_error("nonpositive power of zero absolute value");
      return zero();
    }
    return from_exponent(exp_ * Rational(e));
  }

  friend bool operator==(const AbsVal& a, const AbsVal& b) {
    if (a.zero_ != b.zero_) return false;
    return a.zero_ || a.exp_ == b.exp_;
  }
  friend bool operator!=(const AbsVal& a, const AbsVal& b) { return !(a == b); }
  friend bool operator<(const AbsVal& a, const AbsVal& b) {
    if (a.zero_) return !b.zero_;
    if (b.zero_) return false;
    return a.exp_ < b.exp_;
  }
  friend bool operator>(const AbsVal& a, const AbsVal& b) { return b < a; }
  friend bool operator<=(const AbsVal& a, const AbsVal& b) { return !(b < a); }
  friend bool operator>=(const AbsVal& a, const AbsVal& b) { return !(a < b); }

  std::string to_string() const {
    if (zero_) return "0";
    if (exp_ == Rational(0)) return "1";
    return "q^(" + exp_.to_string() + ")";
  }

private:
  AbsVal() = default;
  bool zero_ = true;
  Rational exp_;
};

/// |a| = q^deg(a) on A, extended multiplicatively to K; |0| = 0.
inline AbsVal abs_val(const Poly& a) {
  if (a.is_zero()) return AbsVal::zero();
  return AbsVal::from_exponent(Rational(a.deg()));
}

inline AbsVal abs_val(const RatFunc& x) {
  if (x.is_zero()) return AbsVal::zero();
  return AbsVal::from_exponent(Rational(x.num().deg() - x.den().deg()));
}

} // namespace drinfeld

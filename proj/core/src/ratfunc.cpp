#include "drinfeld/ratfunc.hpp"

#include <stdexcept>

namespace drinfeld {

namespace {

// scale so the denominator is monic; num/den must already be reduced
void make_monic_pair(Poly& num, Poly& den) {
  if (!den.is_monic()) {
    const FqElem c = num.field()->inv(den.lc());
    num = num.scaled(c);
    den = den.scaled(c);
  }
}

} // namespace

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::one(num_.field());
    return;
  }
  if (!den_.is_one()) {
    Poly g = gcd(num_, den_);
    if (g.deg() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  make_monic_pair(num_, den_);
}

RatFunc RatFunc::operator-() const {
  return RatFunc(-num_, den_, already_reduced{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  Poly n = den_, d = num_;
  make_monic_pair(n, d);
  return RatFunc(std::move(n), std::move(d), already_reduced{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const FqPtr& f = a.field();
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
  Poly g = gcd(a.den_, b.den_);
  if (g.deg() <= 0) {
    // coprime denominators: the sum is already in lowest terms
    Poly num = a.num_ * b.den_ + b.num_ * a.den_;
    if (num.is_zero()) return RatFunc::zero(f);
    Poly den = a.den_ * b.den_;
    make_monic_pair(num, den);
    return RatFunc(std::move(num), std::move(den), RatFunc::already_reduced{});
  }
  Poly bred = b.den_ / g;
  Poly t = a.num_ * bred + b.num_ * (a.den_ / g);
  if (t.is_zero()) return RatFunc::zero(f);
  Poly g2 = gcd(t, g);
  Poly den = a.den_ * bred; // g * (a.den/g) * (b.den/g)
  if (g2.deg() > 0) {
    t = t / g2;
    den = den / g2;
  }
  make_monic_pair(t, den);
  return RatFunc(std::move(t), std::move(den), RatFunc::already_reduced{});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc::zero(a.field());
  Poly an = a.num_, bd = b.den_;
  Poly g1 = gcd(an, bd);
  if (g1.deg() > 0) {
    an = an / g1;
    bd = bd / g1;
  }
  Poly bn = b.num_, ad = a.den_;
  Poly g2 = gcd(bn, ad);
  if (g2.deg() > 0) {
    bn = bn / g2;
    ad = ad / g2;
  }
  Poly num = an * bn, den = ad * bd;
  make_monic_pair(num, den);
  return RatFunc(std::move(num), std::move(den), RatFunc::already_reduced{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc operator*(const RatFunc& a, const Poly& b) { return a * RatFunc(b); }
RatFunc operator*(const Poly& a, const RatFunc& b) { return RatFunc(a) * b; }

} // namespace drinfeld

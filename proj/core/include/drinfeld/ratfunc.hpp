#pragma once

#include <utility>

#include "drinfeld/poly.hpp"

namespace drinfeld {

/// Element of K = F_q(T) as a reduced fraction num/den with monic
/// denominator; zero is 0/1.  The canonical form is unique, so equality is
/// plain coordinate equality.
class RatFunc {
public:
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}
  RatFunc(Poly num, Poly den);

  static RatFunc zero(const FqPtr& f) { return RatFunc(Poly::zero(f)); }
  static RatFunc one(const FqPtr& f) { return RatFunc(Poly::one(f)); }
  static RatFunc from_int(const FqPtr& f, long long v) {
    return RatFunc(Poly::from_int(f, v));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FqPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc inverse() const; // throws on zero

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
  struct already_reduced {};
  RatFunc(Poly num, Poly den, already_reduced)
      : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

RatFunc operator*(const RatFunc& a, const Poly& b);
RatFunc operator*(const Poly& a, const RatFunc& b);

} // namespace drinfeld

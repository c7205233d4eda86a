#include "drinfeld/poly.hpp"

#include <stdexcept>

namespace drinfeld {

namespace {

void check_same_field(const Poly& a, const Poly& b) {
  if (!a.field()->same(*b.field()))
    throw std::invalid_argument("polynomials over different fields");
}

// r -= c * b * T^shift, in place; r must be large enough
void sub_scaled_shifted(const Fq& F, std::vector<FqElem>& r,
                        const std::vector<FqElem>& b, FqElem c,
                        std::size_t shift) {
  if (c == 0) return;
  if (F.l() == 1) {
    const unsigned long long p = F.p();
    for (std::size_t i = 0; i < b.size(); ++i) {
      unsigned long long v =
          (r[shift + i] + p * p - static_cast<unsigned long long>(c) * b[i] % p) % p;
      r[shift + i] = static_cast<FqElem>(v);
    }
  } else {
    for (std::size_t i = 0; i < b.size(); ++i)
      r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
  }
}

void trim_vec(std::vector<FqElem>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

} // namespace

Poly Poly::monomial(const FqPtr& f, unsigned e, FqElem c) {
  std::vector<FqElem> v(e + 1, 0);
  v[e] = c;
  return Poly(f, std::move(v));
}

Poly Poly::scaled(FqElem c) const {
  if (c == 0 || is_zero()) return Poly(field_);
  if (c == 1) return *this;
  std::vector<FqElem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], c);
  return Poly(field_, std::move(v));
}

Poly Poly::shifted(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<FqElem> v(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), v.begin() + k);
  return Poly(field_, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) throw std::invalid_argument("monic() of zero polynomial");
  return scaled(field_->inv(lc()));
}

Poly Poly::operator-() const {
  std::vector<FqElem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->neg(c_[i]);
  return Poly(field_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const Fq& F = *a.field_;
  std::vector<FqElem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = F.add(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
  return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const Fq& F = *a.field_;
  std::vector<FqElem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = F.sub(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
  return Poly(a.field_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const Fq& F = *a.field_;
  if (F.l() == 1) {
    // lazy reduction: term products and partial sums fit in 64 bits since
    // p < 2^16 and operand lengths stay far below 2^31
    const unsigned long long p = F.p();
    std::vector<unsigned long long> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      const unsigned long long ai = a.c_[i];
      if (ai == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        acc[i + j] += ai * b.c_[j];
    }
    std::vector<FqElem> v(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
      v[i] = static_cast<FqElem>(acc[i] % p);
    return Poly(a.field_, std::move(v));
  }
  std::vector<FqElem> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const FqElem ai = a.c_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) v[i + j] = F.add(v[i + j], F.mul(ai, b.c_[j]));
  }
  return Poly(a.field_, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  const Fq& F = *a.field_;
  if (a.deg() < b.deg()) return {Poly(a.field_), a};
  std::vector<FqElem> rem = a.c_;
  std::vector<FqElem> quot(a.c_.size() - b.c_.size() + 1, 0);
  const FqElem lcinv = F.inv(b.lc());
  for (std::size_t top = rem.size(); top-- >= b.c_.size();) {
    if (rem[top] == 0) continue;
    const FqElem c = F.mul(rem[top], lcinv);
    const std::size_t shift = top - (b.c_.size() - 1);
    quot[shift] = c;
    sub_scaled_shifted(F, rem, b.c_, c, shift);
  }
  trim_vec(rem);
  return {Poly(a.field_, std::move(quot)), Poly(a.field_, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const Fq& F = *a.field();
  std::vector<FqElem> u = a.coeffs(), v = b.coeffs();
  while (!v.empty()) {
    // u mod v in place
    const FqElem lcinv = F.inv(v.back());
    while (u.size() >= v.size()) {
      if (u.back() != 0) {
        const FqElem c = F.mul(u.back(), lcinv);
        sub_scaled_shifted(F, u, v, c, u.size() - v.size());
      }
      u.pop_back();
      trim_vec(u);
      if (u.empty()) break;
    }
    std::swap(u, v);
  }
  Poly g(a.field(), std::move(u));
  return g.is_zero() ? g : g.monic();
}

Poly pow(const Poly& a, unsigned long long e) {
  Poly r = Poly::one(a.field());
  if (e == 0) return r;
  Poly base = a;
  while (true) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (!e) break;
    base = base * base;
  }
  return r;
}

Poly pow_char(const Poly& a, unsigned long long pk) {
  const Fq& F = *a.field();
  {
    unsigned long long v = pk;
    while (v % F.p() == 0) v /= F.p();
    if (v != 1) throw std::invalid_argument("pow_char exponent must be a power of p");
  }
  if (a.is_zero()) return a;
  std::vector<FqElem> v(static_cast<std::size_t>(a.deg()) * pk + 1, 0);
  for (unsigned i = 0; i <= static_cast<unsigned>(a.deg()); ++i)
    if (a.coeff(i) != 0) v[static_cast<std::size_t>(i) * pk] = F.pow(a.coeff(i), pk);
  return Poly(a.field(), std::move(v));
}

std::vector<Poly> monic_polys(const FqPtr& f, unsigned d) {
  const unsigned long long q = f->q();
  unsigned long long count = 1;
  for (unsigned i = 0; i < d; ++i) {
    count *= q;
    if (count > 100'000'000ull)
      throw std::invalid_argument("monic enumeration too large");
  }
  std::vector<Poly> out;
  out.reserve(count);
  for (unsigned long long t = 0; t < count; ++t) {
    std::vector<FqElem> c(d + 1, 0);
    unsigned long long v = t;
    // t counts lexicographically on (a_{d-1}, ..., a_0)
    for (unsigned i = 0; i < d; ++i) {
      c[i] = static_cast<FqElem>(v % q);
      v /= q;
    }
    c[d] = 1;
    out.emplace_back(f, std::move(c));
  }
  return out;
}

} // namespace drinfeld

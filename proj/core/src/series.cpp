#include "drinfeld/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace drinfeld {

namespace {

void check_same_field(const USeries& a, const USeries& b) {
  if (!a.field()->same(*b.field()))
    throw std::invalid_argument("series over different fields");
}

} // namespace

USeries::USeries(FqPtr field, unsigned prec)
    : field_(std::move(field)), prec_(prec),
      c_(prec + 1, RatFunc::zero(field_)) {}

USeries::USeries(FqPtr field, unsigned prec, std::vector<RatFunc> coeffs)
    : field_(std::move(field)), prec_(prec), c_(std::move(coeffs)) {
  if (c_.size() > prec_ + 1)
    throw std::invalid_argument("more coefficients than the precision admits");
  c_.resize(prec_ + 1, RatFunc::zero(field_));
}

USeries USeries::one(const FqPtr& f, unsigned prec) {
  USeries s(f, prec);
  s.c_[0] = RatFunc::one(f);
  return s;
}

USeries USeries::monomial(const FqPtr& f, unsigned e, const RatFunc& c, unsigned prec) {
  USeries s(f, prec);
  if (e <= prec) s.c_[e] = c;
  return s;
}

std::optional<unsigned> USeries::order() const {
  for (unsigned i = 0; i <= prec_; ++i)
    if (!c_[i].is_zero()) return i;
  return std::nullopt;
}

USeries USeries::truncated(unsigned new_prec) const {
  if (new_prec > prec_)
    throw std::invalid_argument("cannot raise precision by truncation");
  std::vector<RatFunc> v(c_.begin(), c_.begin() + new_prec + 1);
  return USeries(field_, new_prec, std::move(v));
}

USeries USeries::shifted(unsigned k) const {
  USeries s(field_, prec_ + k);
  for (unsigned i = 0; i <= prec_; ++i) s.c_[i + k] = c_[i];
  return s;
}

USeries USeries::operator-() const {
  USeries s(field_, prec_);
  for (unsigned i = 0; i <= prec_; ++i) s.c_[i] = -c_[i];
  return s;
}

USeries operator+(const USeries& a, const USeries& b) {
  check_same_field(a, b);
  const unsigned prec = std::min(a.prec_, b.prec_);
  USeries s(a.field_, prec);
  for (unsigned i = 0; i <= prec; ++i) s.c_[i] = a.c_[i] + b.c_[i];
  return s;
}

USeries operator-(const USeries& a, const USeries& b) { return a + (-b); }

USeries operator*(const USeries& a, const USeries& b) {
  check_same_field(a, b);
  const unsigned prec = std::min(a.prec_, b.prec_);
  USeries s(a.field_, prec);
  for (unsigned i = 0; i <= prec; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= prec; ++j) {
      if (b.c_[j].is_zero()) continue;
      s.c_[i + j] = s.c_[i + j] + a.c_[i] * b.c_[j];
    }
  }
  return s;
}

USeries operator*(const RatFunc& c, const USeries& a) {
  USeries s(a.field_, a.prec_);
  if (c.is_zero()) return s;
  for (unsigned i = 0; i <= a.prec_; ++i) s.c_[i] = c * a.c_[i];
  return s;
}

USeries operator*(long long c, const USeries& a) {
  return RatFunc::from_int(a.field_, c) * a;
}

bool operator==(const USeries& a, const USeries& b) {
  check_same_field(a, b);
  const unsigned prec = std::min(a.prec_, b.prec_);
  for (unsigned i = 0; i <= prec; ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

USeries invert(const USeries& f) {
  if (f.coeff(0).is_zero())
    throw std::domain_error("series inverse needs a nonzero constant term");
  const unsigned prec = f.prec();
  const RatFunc c0inv = f.coeff(0).inverse();

  // nonzero coefficient positions of f beyond the constant term
  std::vector<unsigned> support;
  for (unsigned i = 1; i <= prec; ++i)
    if (!f.coeff(i).is_zero()) support.push_back(i);

  std::vector<RatFunc> g;
  g.reserve(prec + 1);
  g.push_back(c0inv);
  for (unsigned k = 1; k <= prec; ++k) {
    RatFunc acc = RatFunc::zero(f.field());
    for (unsigned i : support) {
      if (i > k) break;
      acc = acc + f.coeff(i) * g[k - i];
    }
    g.push_back(-(c0inv * acc));
  }
  return USeries(f.field(), prec, std::move(g));
}

USeries pow(const USeries& f, unsigned long long e) {
  USeries r = USeries::one(f.field(), f.prec());
  if (e == 0) return r;
  USeries base = f;
  while (true) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (!e) break;
    base = base * base;
  }
  return r;
}

USeries eval_poly(const std::vector<RatFunc>& poly_coeffs, const USeries& s) {
  const auto ord = s.order();
  if (ord.has_value() && *ord == 0)
    throw std::domain_error("eval_poly requires a series of order >= 1");
  const FqPtr& f = s.field();
  USeries acc(f, s.prec());
  bool started = false;
  for (std::size_t e = poly_coeffs.size(); e-- > 0;) {
    if (started) acc = acc * s;
    if (!poly_coeffs[e].is_zero()) {
      acc = acc + USeries::monomial(f, 0, poly_coeffs[e], s.prec());
      started = true;
    } else if (!started) {
      continue;
    }
  }
  return acc;
}

} // namespace drinfeld

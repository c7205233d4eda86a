#include "drinfeld/expansions.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>

#include "drinfeld/carlitz.hpp"

namespace drinfeld {

USeries u_a(const Poly& a, unsigned prec) {
  if (a.is_zero() || !a.is_monic())
    throw std::invalid_argument("u_a requires a monic polynomial");
  const FqPtr& f = a.field();
  const unsigned d = static_cast<unsigned>(a.deg());
  if (d == 0) return USeries::monomial(f, 1, RatFunc::one(f), prec);

  unsigned long long qd = 1;
  for (unsigned i = 0; i < d; ++i) qd *= f->q();
  if (qd > prec) return USeries(f, prec); // order q^d is beyond the window

  // C_a(1/u) = u^(-q^d) R(u) with R(u) = sum_i c_i u^(q^d - q^i), R(0) = 1;
  // then u_a = u^(q^d) / R(u).
  const CarlitzPoly c = carlitz_poly(a);
  const unsigned inner = prec - static_cast<unsigned>(qd);
  USeries r(f, inner);
  unsigned long long qi = 1;
  for (unsigned i = 0; i <= d; ++i) {
    const unsigned long long e = qd - qi;
    if (e <= inner && !c.coeffs[i].is_zero())
      r = r + USeries::monomial(f, static_cast<unsigned>(e), RatFunc(c.coeffs[i]), inner);
    qi *= f->q();
  }
  return invert(r).shifted(static_cast<unsigned>(qd));
}

std::optional<RatFunc> CoeffTable::lookup(const Poly& a) const {
  for (const auto& [poly, value] : entries)
    if (poly == a) return value;
  return std::nullopt;
}

AExpansion::AExpansion(FqPtr field, unsigned exponent, PowerRule rule,
                       std::optional<unsigned> weight)
    : field_(std::move(field)), exponent_(exponent), rule_(rule), weight_(weight),
      type_(exponent % (field_->q() - 1)), scalar_(RatFunc::one(field_)) {
  if (exponent_ < 1) throw std::invalid_argument("exponent must be positive");
}

AExpansion::AExpansion(FqPtr field, unsigned exponent, CoeffTable table,
                       std::optional<unsigned> weight)
    : field_(std::move(field)), exponent_(exponent), rule_(std::move(table)),
      weight_(weight), type_(exponent % (field_->q() - 1)),
      scalar_(RatFunc::one(field_)) {
  if (exponent_ < 1) throw std::invalid_argument("exponent must be positive");
}

RatFunc AExpansion::coefficient(const Poly& a) const {
  if (const auto* pr = std::get_if<PowerRule>(&rule_))
    return RatFunc(pow(a, pr->e));
  const auto& tab = std::get<CoeffTable>(rule_);
  if (a.deg() > static_cast<int>(tab.max_deg)) return RatFunc::zero(field_);
  const auto hit = tab.lookup(a);
  return hit ? *hit : RatFunc::zero(field_);
}

AExpansion AExpansion::with_scalar(RatFunc s) const {
  AExpansion out = *this;
  out.scalar_ = std::move(s);
  return out;
}

AExpansion AExpansion::scaled(const RatFunc& s) const {
  return with_scalar(scalar_ * s);
}

AExpansion AExpansion::twisted(unsigned n) const {
  AExpansion out = *this;
  out.exponent_ = exponent_ + n;
  out.type_ = out.exponent_ % (field_->q() - 1);
  if (out.weight_) *out.weight_ += 2 * n;
  if (auto* pr = std::get_if<PowerRule>(&out.rule_)) {
    pr->e += n;
  } else {
    auto& tab = std::get<CoeffTable>(out.rule_);
    for (auto& [a, c] : tab.entries) c = c * pow(a, n);
  }
  return out;
}

AExpansion make_f(const FqPtr& f, unsigned k, unsigned n) {
  if (n < 1 || k <= n)
    throw std::invalid_argument("f_{k,n} requires k > n >= 1");
  return AExpansion(f, n, PowerRule{k - n}, k);
}

NamedForm make_h(const FqPtr& f) {
  NamedForm nf{NamedForm::Tag::h, make_f(f, f->q() + 1, 1), std::nullopt,
               f->q() + 1, 1};
  return nf;
}

NamedForm make_f_s(const FqPtr& f, unsigned s) {
  if (s < 1) throw std::invalid_argument("f_s requires s >= 1");
  const unsigned k = 2 + s * (f->q() - 1);
  NamedForm nf{NamedForm::Tag::f_s, make_f(f, k, 1), std::nullopt, k, s};
  return nf;
}

NamedForm make_f_kn(const FqPtr& f, unsigned k, unsigned n) {
  return NamedForm{NamedForm::Tag::f_kn, make_f(f, k, n), std::nullopt, k, 0};
}

NamedForm make_eisenstein(const FqPtr& f, unsigned k) {
  const RatFunc z = zeta_ratio(f, k); // validates k
  if (z.is_zero())
    throw std::domain_error("zeta_ratio vanishes; Eisenstein normalization undefined");
  AExpansion sum(f, k, PowerRule{0}, k);
  return NamedForm{NamedForm::Tag::eisenstein, sum.with_scalar(z.inverse()),
                   RatFunc::one(f), k, 0};
}

NamedForm make_g(const FqPtr& f) {
  NamedForm nf = make_eisenstein(f, f->q() - 1);
  nf.tag = NamedForm::Tag::g;
  return nf;
}

namespace {

USeries expand_degree_block(const AExpansion& f, unsigned prec,
                            const std::vector<RatFunc>& goss_dense,
                            std::size_t lo, std::size_t hi,
                            const std::vector<Poly>& monics) {
  USeries acc(f.field(), prec);
  for (std::size_t idx = lo; idx < hi; ++idx) {
    const Poly& a = monics[idx];
    const RatFunc c = f.coefficient(a);
    if (c.is_zero()) continue;
    acc = acc + c * eval_poly(goss_dense, u_a(a, prec));
  }
  return acc;
}

} // namespace

USeries expand(const AExpansion& f, unsigned prec, const GossPoly& g,
               unsigned threads) {
  if (g.n() != f.exponent())
    throw std::invalid_argument("Goss polynomial index does not match the expansion");
  const FqPtr& field = f.field();
  USeries total(field, prec);
  if (f.scalar().is_zero() || g.is_zero()) return total;
  const auto goss_dense = g.dense_coeffs();
  const unsigned long long ord = g.ord();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  unsigned long long qd = 1;
  for (unsigned d = 0; qd * ord <= prec; ++d) {
    const std::vector<Poly> monics = monic_polys(field, d);
    if (threads <= 1 || monics.size() < 2 * threads) {
      total = total + expand_degree_block(f, prec, goss_dense, 0, monics.size(), monics);
    } else {
      // independent exact partial sums, recombined in a fixed order
      const std::size_t nchunks = threads;
      std::vector<std::future<USeries>> parts;
      for (std::size_t c = 0; c < nchunks; ++c) {
        const std::size_t lo = monics.size() * c / nchunks;
        const std::size_t hi = monics.size() * (c + 1) / nchunks;
        parts.push_back(std::async(std::launch::async, expand_degree_block,
                                   std::cref(f), prec, std::cref(goss_dense),
                                   lo, hi, std::cref(monics)));
      }
      for (auto& part : parts) total = total + part.get();
    }
    qd *= field->q();
  }
  return f.scalar() * total;
}

USeries expand(const AExpansion& f, unsigned prec, unsigned threads) {
  return expand(f, prec, goss_poly(f.field(), f.exponent()), threads);
}

USeries expand(const NamedForm& f, unsigned prec, unsigned threads) {
  USeries s = expand(f.expansion, prec, threads);
  if (f.constant_term)
    s = s + USeries::monomial(f.expansion.field(), 0, *f.constant_term, prec);
  return s;
}

USeries eisenstein(const FqPtr& f, unsigned k, unsigned prec) {
  return expand(make_eisenstein(f, k), prec);
}

} // namespace drinfeld

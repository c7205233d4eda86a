#include "drinfeld/goss.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>

namespace drinfeld {

namespace {

// Goss coefficients are carried as exact unreduced fractions
//   num / prod_i D_i^{e_i}
// with the denominator a monomial in the D_i.  Aligning denominators is
// then componentwise max plus an exact cofactor multiplication; no gcd is
// ever needed until a caller asks for reduced coefficients.

using ExpVec = std::vector<std::uint32_t>;

void trim_exp(ExpVec& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

ExpVec max_exp(const ExpVec& a, const ExpVec& b) {
  ExpVec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = std::max(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim_exp(r);
  return r;
}

ExpVec with_delta(ExpVec e, unsigned i) {
  if (e.size() <= i) e.resize(i + 1, 0);
  ++e[i];
  trim_exp(e);
  return e;
}

ExpVec scaled_exp(ExpVec e, unsigned factor) {
  for (auto& x : e) x *= factor;
  return e;
}

struct RawCoeff {
  Poly num;
  ExpVec den;

  bool is_zero() const { return num.is_zero(); }
};

struct RawPoly {
  unsigned n = 0;
  std::vector<RawCoeff> gap; // gap[t] is the coefficient of X^(n - t(q-1))
};

// Carlitz data plus caches of D_i powers and assembled denominators.
struct DCtx {
  FqPtr field;
  CarlitzCoeffs car;
  std::map<std::pair<unsigned, unsigned>, Poly> dpow;
  std::map<ExpVec, Poly> den_polys;

  explicit DCtx(FqPtr f) : field(std::move(f)), car(CarlitzCoeffs::up_to(field, 0)) {}

  void ensure_brackets(unsigned imax) {
    if (car.max_index() < imax) car = CarlitzCoeffs::up_to(field, imax);
  }

  const Poly& dpow_get(unsigned i, unsigned e) {
    assert(e >= 1);
    if (e == 1) return car.big_d[i];
    const auto key = std::make_pair(i, e);
    auto it = dpow.find(key);
    if (it != dpow.end()) return it->second;
    Poly v = dpow_get(i, e - 1) * car.big_d[i];
    return dpow.emplace(key, std::move(v)).first->second;
  }

  // prod_i D_i^{target_i - src_i}; target must dominate src
  Poly cofactor(const ExpVec& target, const ExpVec& src) {
    Poly r = Poly::one(field);
    for (std::size_t i = 0; i < target.size(); ++i) {
      const std::uint32_t s = i < src.size() ? src[i] : 0;
      assert(target[i] >= s);
      if (target[i] > s) r = r * dpow_get(static_cast<unsigned>(i), target[i] - s);
    }
    return r;
  }

  const Poly& den_poly(const ExpVec& e) {
    auto it = den_polys.find(e);
    if (it != den_polys.end()) return it->second;
    Poly v = cofactor(e, {});
    return den_polys.emplace(e, std::move(v)).first->second;
  }

  RatFunc reduce(const RawCoeff& c) {
    if (c.is_zero()) return RatFunc::zero(field);
    if (c.den.empty()) return RatFunc(c.num);
    return RatFunc(c.num, den_poly(c.den));
  }

  bool fractions_equal(const Poly& num1, const ExpVec& den1, const Poly& num2,
                       const ExpVec& den2) {
    if (num1.is_zero() || num2.is_zero()) return num1.is_zero() && num2.is_zero();
    const ExpVec m = max_exp(den1, den2);
    return num1 * cofactor(m, den1) == num2 * cofactor(m, den2);
  }

  unsigned long long den_degree(const ExpVec& e) {
    unsigned long long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      d += static_cast<unsigned long long>(e[i]) * car.big_d[i].deg();
    return d;
  }
};

// one contribution to a target gap coefficient
struct Contribution {
  const RawCoeff* coeff;
  unsigned alpha_index; // 0 = no alpha factor
};

GossPoly materialize(DCtx& ctx, const RawPoly& raw) {
  std::vector<RatFunc> gaps;
  gaps.reserve(raw.gap.size());
  for (const auto& c : raw.gap) gaps.push_back(ctx.reduce(c));
  return GossPoly(ctx.field, raw.n, std::move(gaps));
}

} // namespace

// ---------------------------------------------------------------- GossPoly

GossPoly::GossPoly(FqPtr field, unsigned n, std::vector<RatFunc> gap_coeffs)
    : field_(std::move(field)), n_(n), gap_(std::move(gap_coeffs)) {
  while (!gap_.empty() && gap_.back().is_zero()) gap_.pop_back();
}

unsigned GossPoly::gap_count() const {
  if (is_zero()) throw std::domain_error("zero Goss polynomial has no gap structure");
  return static_cast<unsigned>(gap_.size()) - 1;
}

unsigned GossPoly::ord() const {
  return n_ - gap_count() * (field_->q() - 1);
}

std::vector<std::pair<unsigned, RatFunc>> GossPoly::gaps() const {
  std::vector<std::pair<unsigned, RatFunc>> out;
  for (unsigned t = 0; t < gap_.size(); ++t)
    if (!gap_[t].is_zero()) out.emplace_back(t, gap_[t]);
  return out;
}

std::vector<RatFunc> GossPoly::dense_coeffs() const {
  std::vector<RatFunc> out(n_ + 1, RatFunc::zero(field_));
  const unsigned qm1 = field_->q() - 1;
  for (unsigned t = 0; t < gap_.size(); ++t) out[n_ - t * qm1] = gap_[t];
  return out;
}

RatFunc GossPoly::coeff(unsigned exponent) const {
  const unsigned qm1 = field_->q() - 1;
  if (exponent <= n_ && (n_ - exponent) % qm1 == 0) {
    const unsigned t = (n_ - exponent) / qm1;
    if (t < gap_.size()) return gap_[t];
  }
  return RatFunc::zero(field_);
}

// --------------------------------------------------------------- GossTable

struct GossTable::Impl {
  DCtx ctx;
  RatFunc seed;
  std::vector<RawPoly> raw; // raw[n]; raw[0] unused
  std::map<unsigned, GossPoly> reduced;
  std::mutex mu;

  Impl(FqPtr f, RatFunc s) : ctx(std::move(f)), seed(std::move(s)) {
    raw.emplace_back(); // index 0 placeholder
  }

  void grow(unsigned n) {
    const unsigned long long q = ctx.field->q();
    {
      unsigned imax = 0;
      unsigned long long qi = 1;
      while (qi <= n / q) {
        qi *= q;
        ++imax;
      }
      ctx.ensure_brackets(imax + 1);
    }
    while (raw.size() <= n) build(static_cast<unsigned>(raw.size()));
  }

  void build(unsigned m) {
    const unsigned q = ctx.field->q();
    const unsigned qm1 = q - 1;
    RawPoly out;
    out.n = m;
    if (m == 1) {
      if (!seed.is_zero())
        out.gap.push_back(RawCoeff{seed.num(), {}});
      raw.push_back(std::move(out));
      return;
    }

    // sources: G_{m-1} and alpha_i G_{m-q^i} for q^i <= m-1, with the gap
    // offset (q^i - 1)/(q - 1) coming from the extra factor of X
    struct Source {
      const RawPoly* poly;
      unsigned t_off;
      unsigned alpha; // 0 = none
    };
    std::vector<Source> sources;
    sources.push_back({&raw[m - 1], 0, 0});
    {
      unsigned long long qi = q;
      unsigned t_off = 1;
      unsigned i = 1;
      while (qi <= m - 1) {
        sources.push_back({&raw[m - static_cast<unsigned>(qi)], t_off, i});
        t_off += static_cast<unsigned>(qi);
        qi *= q;
        ++i;
      }
    }

    std::size_t s_target = 0;
    bool any = false;
    for (const auto& src : sources)
      for (std::size_t t = 0; t < src.poly->gap.size(); ++t)
        if (!src.poly->gap[t].is_zero()) {
          s_target = std::max(s_target, t + src.t_off);
          any = true;
        }
    if (!any) {
      raw.push_back(std::move(out));
      return;
    }
    assert(s_target * qm1 <= static_cast<std::size_t>(m) - 1);
    (void)qm1;

    out.gap.reserve(s_target + 1);
    for (std::size_t t = 0; t <= s_target; ++t) {
      std::vector<std::pair<const RawCoeff*, unsigned>> contribs;
      for (const auto& src : sources) {
        if (t < src.t_off) continue;
        const std::size_t tp = t - src.t_off;
        if (tp >= src.poly->gap.size()) continue;
        const RawCoeff& c = src.poly->gap[tp];
        if (!c.is_zero()) contribs.emplace_back(&c, src.alpha);
      }
      if (contribs.empty()) {
        out.gap.push_back(RawCoeff{Poly::zero(ctx.field), {}});
        continue;
      }
      ExpVec target;
      for (const auto& [c, a] : contribs)
        target = max_exp(target, a ? with_delta(c->den, a) : c->den);
      Poly num = Poly::zero(ctx.field);
      for (const auto& [c, a] : contribs) {
        const ExpVec src_e = a ? with_delta(c->den, a) : c->den;
        num = num + c->num * ctx.cofactor(target, src_e);
      }
      if (num.is_zero())
        out.gap.push_back(RawCoeff{std::move(num), {}});
      else
        out.gap.push_back(RawCoeff{std::move(num), std::move(target)});
    }
    while (!out.gap.empty() && out.gap.back().is_zero()) out.gap.pop_back();
    raw.push_back(std::move(out));
  }
};

GossTable::GossTable(FqPtr field, std::optional<RatFunc> g0) {
  RatFunc seed = g0.value_or(RatFunc::one(field));
  if (!seed.is_polynomial() || seed.num().deg() > 0)
    throw std::invalid_argument("Goss seed must be a constant");
  impl_ = std::make_unique<Impl>(std::move(field), std::move(seed));
}

GossTable::~GossTable() = default;
GossTable::GossTable(GossTable&&) noexcept = default;
GossTable& GossTable::operator=(GossTable&&) noexcept = default;

const FqPtr& GossTable::field() const { return impl_->ctx.field; }

GossPoly GossTable::poly(unsigned n) {
  if (n < 1) throw std::invalid_argument("Goss index must be positive");
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto it = impl_->reduced.find(n);
  if (it != impl_->reduced.end()) return it->second;
  impl_->grow(n);
  GossPoly gp = materialize(impl_->ctx, impl_->raw[n]);
  impl_->reduced.emplace(n, gp);
  return gp;
}

bool GossTable::frobenius_property_holds(unsigned n) {
  if (n < 1) throw std::invalid_argument("Goss index must be positive");
  std::lock_guard<std::mutex> lock(impl_->mu);
  const unsigned p = impl_->ctx.field->p();
  impl_->grow(p * n);
  const RawPoly& big = impl_->raw[p * n];
  const RawPoly& small = impl_->raw[n];
  // every gap of G_{pn} must match the p-th power termwise
  for (std::size_t t2 = 0; t2 < big.gap.size(); ++t2) {
    const RawCoeff& c2 = big.gap[t2];
    if (t2 % p == 0 && t2 / p < small.gap.size()) {
      const RawCoeff& c1 = small.gap[t2 / p];
      if (!impl_->ctx.fractions_equal(c2.num, c2.den, pow_char(c1.num, p),
                                      scaled_exp(c1.den, p)))
        return false;
    } else if (!c2.is_zero()) {
      return false;
    }
  }
  for (std::size_t t = 0; t < small.gap.size(); ++t)
    if (!small.gap[t].is_zero() && t * p >= big.gap.size()) return false;
  return true;
}

bool GossTable::coeff_bound_holds(unsigned n) {
  if (n < 1) throw std::invalid_argument("Goss index must be positive");
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->grow(n);
  for (const RawCoeff& c : impl_->raw[n].gap) {
    if (c.is_zero()) continue;
    if (static_cast<unsigned long long>(c.num.deg()) > impl_->ctx.den_degree(c.den))
      return false;
  }
  return true;
}

unsigned GossTable::ord(unsigned n) {
  if (n < 1) throw std::invalid_argument("Goss index must be positive");
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->grow(n);
  const RawPoly& r = impl_->raw[n];
  if (r.gap.empty()) throw std::domain_error("zero Goss polynomial has no X-order");
  return n - static_cast<unsigned>(r.gap.size() - 1) * (impl_->ctx.field->q() - 1);
}

// -------------------------------------------------------------- GossOracle

struct GossOracle::Impl {
  DCtx ctx;
  unsigned n_max;
  // rows[j][k] = [z^k] e_C(z)^j as a raw fraction, 0 <= j, k <= n_max - 1
  std::vector<std::vector<RawCoeff>> rows;
  std::mutex mu; // reduction caches grow on poly()

  Impl(FqPtr f, unsigned nm) : ctx(std::move(f)), n_max(nm) {
    const unsigned long long q = ctx.field->q();
    const unsigned kmax = n_max - 1;
    {
      unsigned imax = 0;
      unsigned long long qi = 1;
      while (qi * q <= std::max(1u, kmax)) {
        qi *= q;
        ++imax;
      }
      ctx.ensure_brackets(imax + 1);
    }

    const RawCoeff zero{Poly::zero(ctx.field), {}};
    rows.reserve(n_max);
    std::vector<RawCoeff> cur(kmax + 1, zero);
    cur[0] = RawCoeff{Poly::one(ctx.field), {}};
    rows.push_back(cur);
    for (unsigned j = 1; j <= kmax; ++j) {
      std::vector<RawCoeff> next(kmax + 1, zero);
      for (unsigned k = j; k <= kmax; ++k) {
        // [z^k] E_j = sum_i alpha_i [z^{k-q^i}] E_{j-1}
        std::vector<std::pair<const RawCoeff*, unsigned>> contribs;
        unsigned long long qi = 1;
        unsigned i = 0;
        while (qi <= k) {
          const RawCoeff& c = rows[j - 1][k - static_cast<unsigned>(qi)];
          if (!c.is_zero()) contribs.emplace_back(&c, i);
          qi *= q;
          ++i;
        }
        if (contribs.empty()) continue;
        ExpVec target;
        for (const auto& [c, a] : contribs)
          target = max_exp(target, a ? with_delta(c->den, a) : c->den);
        Poly num = Poly::zero(ctx.field);
        for (const auto& [c, a] : contribs) {
          const ExpVec src_e = a ? with_delta(c->den, a) : c->den;
          num = num + c->num * ctx.cofactor(target, src_e);
        }
        if (!num.is_zero()) next[k] = RawCoeff{std::move(num), std::move(target)};
      }
      rows.push_back(std::move(next));
    }
  }
};

GossOracle::GossOracle(FqPtr field, unsigned n_max) {
  if (n_max < 1) throw std::invalid_argument("oracle bound must be positive");
  impl_ = std::make_unique<Impl>(std::move(field), n_max);
}

GossOracle::~GossOracle() = default;
GossOracle::GossOracle(GossOracle&&) noexcept = default;
GossOracle& GossOracle::operator=(GossOracle&&) noexcept = default;

unsigned GossOracle::n_max() const { return impl_->n_max; }

GossPoly GossOracle::poly(unsigned n) const {
  if (n < 1 || n > impl_->n_max)
    throw std::invalid_argument("Goss index out of oracle range");
  std::lock_guard<std::mutex> lock(impl_->mu);
  const unsigned qm1 = impl_->ctx.field->q() - 1;
  std::vector<RatFunc> gaps;
  for (unsigned t = 0; t * qm1 <= n - 1; ++t) {
    const unsigned j = n - 1 - t * qm1;
    gaps.push_back(impl_->ctx.reduce(impl_->rows[j][n - 1]));
  }
  return GossPoly(impl_->ctx.field, n, std::move(gaps));
}

GossPoly goss_poly(const FqPtr& f, unsigned n) {
  GossTable table(f);
  return table.poly(n);
}

GossPoly goss_poly_oracle(const FqPtr& f, unsigned n) {
  GossOracle oracle(f, n);
  return oracle.poly(n);
}

} // namespace drinfeld

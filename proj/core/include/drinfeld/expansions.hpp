#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "drinfeld/goss.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

/// u_a = u(az) as a power series in u: the reciprocal of C_a(1/u), of order
/// exactly q^(deg a), with coefficients in A.  Requires monic a.
USeries u_a(const Poly& a, unsigned prec);

/// Coefficient rule c_a = a^e.
struct PowerRule {
  unsigned long long e;
};

/// Explicit coefficients for monic a up to a degree bound; unlisted entries
/// are zero.
struct CoeffTable {
  unsigned max_deg = 0;
  std::vector<std::pair<Poly, RatFunc>> entries;

  std::optional<RatFunc> lookup(const Poly& a) const;
};

/// Symbolic A-expansion  scalar * sum_{a monic} c_a G_n(u_a)  of exponent n,
/// with optional weight metadata and the type m = n mod (q-1) unless
/// overridden.
class AExpansion {
public:
  AExpansion(FqPtr field, unsigned exponent, PowerRule rule,
             std::optional<unsigned> weight = std::nullopt);
  AExpansion(FqPtr field, unsigned exponent, CoeffTable table,
             std::optional<unsigned> weight = std::nullopt);

  const FqPtr& field() const { return field_; }
  unsigned exponent() const { return exponent_; }
  std::optional<unsigned> weight() const { return weight_; }
  unsigned type() const { return type_; }
  const RatFunc& scalar() const { return scalar_; }
  bool is_power_rule() const { return std::holds_alternative<PowerRule>(rule_); }
  const PowerRule& power_rule() const { return std::get<PowerRule>(rule_); }
  const CoeffTable& table() const { return std::get<CoeffTable>(rule_); }

  /// c_a for monic a (without the scalar).
  RatFunc coefficient(const Poly& a) const;

  AExpansion with_scalar(RatFunc s) const;
  AExpansion scaled(const RatFunc& s) const;
  /// Derived expansion with coefficients c_a * a^n and exponent shifted by
  /// n; used by the hyperderivative action.
  AExpansion twisted(unsigned n) const;

private:
  FqPtr field_;
  unsigned exponent_;
  std::variant<PowerRule, CoeffTable> rule_;
  std::optional<unsigned> weight_;
  unsigned type_;
  RatFunc scalar_;
};

/// f_{k,n} = sum a^(k-n) G_n(u_a); requires k > n >= 1.
AExpansion make_f(const FqPtr& f, unsigned k, unsigned n);

/// The named forms of the library: the single cuspidal family f_s (weight
/// 2 + s(q-1), type 1), h = f_1, the normalized Eisenstein series
/// E_k = 1 + zeta_ratio(k)^(-1) sum_a G_k(u_a) and g = E_{q-1}.
struct NamedForm {
  enum class Tag { h, g, f_s, f_kn, eisenstein };

  Tag tag;
  AExpansion expansion;
  std::optional<RatFunc> constant_term; // Eisenstein forms only
  unsigned weight = 0;
  unsigned s = 0; // for f_s
};

NamedForm make_h(const FqPtr& f);
NamedForm make_f_s(const FqPtr& f, unsigned s);
NamedForm make_f_kn(const FqPtr& f, unsigned k, unsigned n);
NamedForm make_eisenstein(const FqPtr& f, unsigned k);
NamedForm make_g(const FqPtr& f);

/// Expansion at infinity through u^prec: all monic a with
/// q^(deg a) * ord_X(G_n) <= prec contribute; higher degrees provably
/// cannot reach below u^(prec+1).  The reduction is exact addition, so any
/// thread count gives bit-identical results.
USeries expand(const AExpansion& f, unsigned prec, unsigned threads = 1);
USeries expand(const NamedForm& f, unsigned prec, unsigned threads = 1);

/// Same, with a caller-supplied Goss polynomial (must be the G of the
/// expansion's exponent); lets callers share a table or inject a test one.
USeries expand(const AExpansion& f, unsigned prec, const GossPoly& g,
               unsigned threads = 1);

/// Normalized Eisenstein series expansion: constant term exactly 1,
/// exponents congruent to 0 mod q-1.  k must be a positive multiple of
/// q-1 with zeta_ratio(k) != 0.
USeries eisenstein(const FqPtr& f, unsigned k, unsigned prec);

} // namespace drinfeld

#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "drinfeld/carlitz.hpp"
#include "drinfeld/ratfunc.hpp"

namespace drinfeld {

/// Goss polynomial G_n for the lattice of the Carlitz module, with its gap
/// structure: G_n(X) = sum_{t=0..s} gamma_t X^(n - t(q-1)), gamma_0 = 1.
/// Monic of degree n, divisible by X, nonzero exponents congruent to n mod
/// q-1, every nonzero coefficient of absolute value <= 1.
class GossPoly {
public:
  GossPoly(FqPtr field, unsigned n, std::vector<RatFunc> gap_coeffs);

  const FqPtr& field() const { return field_; }
  unsigned n() const { return n_; }
  bool is_zero() const { return gap_.empty(); }

  /// Number of gap steps s (so ord_X = n - s(q-1)).
  unsigned gap_count() const;
  unsigned ord() const; // order of vanishing at X = 0

  /// gamma_t for t = 0..s, exponent n - t(q-1); may contain zeros strictly
  /// between the ends.
  const std::vector<RatFunc>& gap_coeffs() const { return gap_; }
  /// The nonzero (t, gamma_t) pairs.
  std::vector<std::pair<unsigned, RatFunc>> gaps() const;

  /// Dense coefficient vector indexed by exponent (size n+1), for series
  /// evaluation and printing.
  std::vector<RatFunc> dense_coeffs() const;
  RatFunc coeff(unsigned exponent) const;

  friend bool operator==(const GossPoly& a, const GossPoly& b) {
    return a.n_ == b.n_ && a.gap_ == b.gap_;
  }
  friend bool operator!=(const GossPoly& a, const GossPoly& b) { return !(a == b); }

private:
  FqPtr field_;
  unsigned n_;
  std::vector<RatFunc> gap_;
};

/// Memoizing computation of G_1, G_2, ... by the recursion
///   G_n = X * (G_{n-1} + sum_{i>=1, n-q^i >= 1} alpha_i G_{n-q^i}),
/// alpha_i = 1/D_i, G_0 = 1 (so G_1 = X).  Internally the coefficients are
/// carried as exact fractions num / prod D_i^{e_i}, which avoids gcd
/// normalization in the hot path; poly() reduces on demand.  Thread-safe.
///
/// The g0 seed exists as a test hook (a wrong seed must be caught by the
/// downstream checks); it must be a constant polynomial value.
class GossTable {
public:
  explicit GossTable(FqPtr field, std::optional<RatFunc> g0 = std::nullopt);
  ~GossTable();
  GossTable(GossTable&&) noexcept;
  GossTable& operator=(GossTable&&) noexcept;

  const FqPtr& field() const;

  /// Reduced public form of G_n (n >= 1).
  GossPoly poly(unsigned n);

  /// Exact check of G_{p n} == (G_n)^p on the internal fraction
  /// representation (no reduction), by cross multiplication.
  bool frobenius_property_holds(unsigned n);

  /// Exact check that every nonzero coefficient of G_n has absolute value
  /// <= 1, read off unreduced degrees.
  bool coeff_bound_holds(unsigned n);

  /// ord_X G_n without reducing coefficients.
  unsigned ord(unsigned n);

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Independent route to the same polynomials through the generating
/// function: G_n(X) = X * [z^(n-1)] (1 - X e_C(z))^(-1), expanded via the
/// powers of the Carlitz exponential.  Construction precomputes everything
/// needed for n <= n_max.
class GossOracle {
public:
  GossOracle(FqPtr field, unsigned n_max);
  ~GossOracle();
  GossOracle(GossOracle&&) noexcept;
  GossOracle& operator=(GossOracle&&) noexcept;

  unsigned n_max() const;
  GossPoly poly(unsigned n) const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot helpers (build a fresh table / oracle per call).
GossPoly goss_poly(const FqPtr& f, unsigned n);
GossPoly goss_poly_oracle(const FqPtr& f, unsigned n);

} // namespace drinfeld

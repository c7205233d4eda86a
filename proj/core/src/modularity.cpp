#include "drinfeld/modularity.hpp"

#include <stdexcept>

#include "drinfeld/expansions.hpp"
#include "drinfeld/linalg.hpp"

namespace drinfeld {

std::vector<std::pair<unsigned, unsigned>> basis_monomials(const FqPtr& f,
                                                           unsigned k, unsigned m) {
  const unsigned qm1 = f->q() - 1;
  const unsigned qp1 = f->q() + 1;
  if (m >= qm1) throw std::invalid_argument("type must satisfy 0 <= m < q-1");
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned j = 0; j * qp1 <= k; ++j) {
    if (j % qm1 != m) continue;
    const unsigned rest = k - j * qp1;
    if (rest % qm1 != 0) continue;
    out.emplace_back(rest / qm1, j);
  }
  return out;
}

bool BasisSolution::cuspidal() const {
  if (!success) return false;
  for (std::size_t idx = 0; idx < monomials.size(); ++idx)
    if (!coefficients[idx].is_zero() && monomials[idx].second == 0) return false;
  return true;
}

BasisSolution express(const USeries& f, unsigned k, unsigned m, unsigned threads) {
  const FqPtr& field = f.field();
  BasisSolution out;
  out.k = k;
  out.m = m;
  out.monomials = basis_monomials(field, k, m);

  const unsigned dim = static_cast<unsigned>(out.monomials.size());
  if (dim == 0) {
    // the space is zero: f must vanish through its precision
    const auto ord = f.order();
    out.success = !ord.has_value();
    if (!out.success) out.residual_row = *ord;
    return out;
  }
  if (f.prec() < 2 * dim * (field->q() + 1))
    throw std::domain_error("precision too low for a reliable basis expression");

  const unsigned prec = f.prec();
  unsigned max_i = 0, max_j = 0;
  for (const auto& [i, j] : out.monomials) {
    max_i = std::max(max_i, i);
    max_j = std::max(max_j, j);
  }

  const USeries g = expand(make_g(field), prec, threads);
  const USeries h = expand(make_h(field), prec, threads);
  std::vector<USeries> gpow{USeries::one(field, prec)};
  for (unsigned i = 1; i <= max_i; ++i) gpow.push_back(gpow.back() * g);
  std::vector<USeries> hpow{USeries::one(field, prec)};
  for (unsigned j = 1; j <= max_j; ++j) hpow.push_back(hpow.back() * h);

  std::vector<std::vector<RatFunc>> columns;
  columns.reserve(dim);
  for (const auto& [i, j] : out.monomials)
    columns.push_back((gpow[i] * hpow[j]).coeffs());

  const auto solved = solve_linear(columns, f.coeffs());
  if (solved.ok()) {
    out.success = true;
    out.coefficients = solved.solution;
  } else if (solved.status == LinearSolve::Status::inconsistent) {
    out.residual_row = static_cast<unsigned>(*solved.witness_row);
  }
  return out;
}

std::optional<unsigned> ord_at_infinity(const USeries& f) { return f.order(); }

} // namespace drinfeld

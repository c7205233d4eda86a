#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/ratfunc.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

// Canonical text formats (grammar in docs/formats.md):
//   Poly     sparse sum "c*T^e", terms in decreasing degree, coefficients
//            printed 0..p-1 for prime fields and as w-combinations for
//            extensions, composite coefficients parenthesized
//   RatFunc  "num/den", composite sides parenthesized, "/1" omitted
//   USeries  "c3*u^3 + c5*u^5 + O(u^9)"

std::string to_string(const Poly& a, const std::string& var = "T");
std::string to_string(const RatFunc& x, const std::string& var = "T");
std::string to_string(const USeries& s, const std::string& var = "u");

/// Dense polynomial over K (index = exponent), printed like Poly but with
/// RatFunc coefficients; used for Goss polynomials and Carlitz actions.
std::string kpoly_to_string(const std::vector<RatFunc>& dense,
                            const std::string& var);

Poly parse_poly(const FqPtr& f, std::string_view text,
                const std::string& var = "T");
RatFunc parse_ratfunc(const FqPtr& f, std::string_view text,
                      const std::string& var = "T");

/// {"var":"u","prec":M,"coeffs":[{"pow":i,"value":"<RatFunc>"}]}, nonzero
/// coefficients only, ascending pow.
std::string useries_to_json(const USeries& s, const std::string& var = "u");
USeries useries_from_json(const FqPtr& f, std::string_view json);

/// Same coefficient schema with "deg" instead of "prec" for exact
/// polynomials over K.
std::string kpoly_to_json(const std::vector<RatFunc>& dense,
                          const std::string& var);

std::ostream& operator<<(std::ostream& os, const Poly& a);
std::ostream& operator<<(std::ostream& os, const RatFunc& x);
std::ostream& operator<<(std::ostream& os, const USeries& s);

} // namespace drinfeld

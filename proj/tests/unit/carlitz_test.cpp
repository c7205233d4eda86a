#include <doctest.h>

#include "drinfeld/carlitz.hpp"
#include "drinfeld/io.hpp"
#include "test_util.hpp"

using namespace drinfeld;

namespace {

// composition of F_q-linear polynomials given by their q-power coefficient
// lists: (f o g)_k = sum_{i+j=k} f_i * g_j^(q^i); independent oracle for the
// multiplicativity of a |-> C_a
std::vector<Poly> compose_linear(const FqPtr& f, const std::vector<Poly>& a,
                                 const std::vector<Poly>& b) {
  std::vector<Poly> out(a.size() + b.size() - 1, Poly::zero(f));
  unsigned long long qi = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = out[i + j] + a[i] * pow_char(b[j], qi);
    qi *= f->q();
  }
  return out;
}

} // namespace

TEST_CASE("carlitz action examples") {
  const FqPtr f = Fq::make(3);
  const Poly t = Poly::T(f);

  // C_1(X) = X
  const auto c1 = carlitz_poly(Poly::one(f));
  REQUIRE(c1.coeffs.size() == 1);
  CHECK(c1.coeffs[0].is_one());

  // C_T(X) = T*X + X^3
  const auto ct = carlitz_poly(t);
  REQUIRE(ct.coeffs.size() == 2);
  CHECK(ct.coeffs[0] == t);
  CHECK(ct.coeffs[1].is_one());

  // C_{T^2}(X) = T^2 X + (T^3 + T) X^3 + X^9, which is also C_T o C_T
  const auto ct2 = carlitz_poly(t * t);
  REQUIRE(ct2.coeffs.size() == 3);
  CHECK(ct2.coeffs[0] == t * t);
  CHECK(ct2.coeffs[1] == pow(t, 3) + t);
  CHECK(ct2.coeffs[2].is_one());
  CHECK(ct2.coeffs == compose_linear(f, ct.coeffs, ct.coeffs));

  CHECK_THROWS_AS(carlitz_poly(Poly::zero(f)), std::invalid_argument);
}

TEST_CASE("carlitz action is a ring homomorphism") {
  for (unsigned q : {2u, 3u, 4u}) {
    const FqPtr f = Fq::make(q);
    test::Rng rng(31 * q);
    for (int it = 0; it < 15; ++it) {
      const Poly a = test::random_nonzero_poly(rng, f, 3);
      const Poly b = test::random_nonzero_poly(rng, f, 3);
      // additivity
      if (!(a + b).is_zero()) {
        const auto cab = carlitz_poly(a + b);
        for (std::size_t i = 0; i < cab.coeffs.size(); ++i) {
          Poly want = Poly::zero(f);
          const auto ca = carlitz_poly(a), cb = carlitz_poly(b);
          if (i < ca.coeffs.size()) want = want + ca.coeffs[i];
          if (i < cb.coeffs.size()) want = want + cb.coeffs[i];
          CHECK(cab.coeffs[i] == want);
        }
      }
      // multiplicativity via linear composition
      const auto prod = carlitz_poly(a * b);
      CHECK(prod.coeffs ==
            compose_linear(f, carlitz_poly(a).coeffs, carlitz_poly(b).coeffs));
    }
  }
}

TEST_CASE("coefficient degree bound") {
  const FqPtr f = Fq::make(3);
  for (unsigned d = 1; d <= 4; ++d)
    for (const Poly& a : monic_polys(f, d)) {
      const auto c = carlitz_poly(a);
      unsigned long long qi = 1;
      for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        if (!c.coeffs[i].is_zero())
          CHECK(static_cast<unsigned long long>(c.coeffs[i].deg()) <=
                qi * (d - i));
        qi *= 3;
      }
    }
}

TEST_CASE("bracket and factorial degrees") {
  for (unsigned q : {2u, 3u, 5u}) {
    const FqPtr f = Fq::make(q);
    const auto c = CarlitzCoeffs::up_to(f, 3);
    CHECK(c.alpha[0].is_one());
    CHECK(c.big_d[0].is_one());
    unsigned long long qi = 1;
    for (unsigned i = 1; i <= 3; ++i) {
      qi *= q;
      CHECK(static_cast<unsigned long long>(c.brackets[i].deg()) == qi);
      CHECK(static_cast<unsigned long long>(c.big_d[i].deg()) == i * qi);
      CHECK(c.big_d[i].is_monic());
    }
  }
}

TEST_CASE("exponential series") {
  const FqPtr f = Fq::make(3);
  const Poly t = Poly::T(f);
  const Poly br1 = pow(t, 3) - t;            // [1]
  const Poly d2 = (pow(t, 9) - t) * pow(br1, 3); // [2]*[1]^3

  const USeries e3 = exp_series(f, 3);
  CHECK(e3.coeff(1).is_one());
  CHECK(e3.coeff(2).is_zero());
  CHECK(e3.coeff(3) == RatFunc(Poly::one(f), br1));

  const USeries e9 = exp_series(f, 9);
  CHECK(e9.coeff(9) == RatFunc(Poly::one(f), d2));

  for (unsigned q : {2u, 4u, 5u}) {
    CHECK(exp_series(Fq::make(q), 6).coeff(1).is_one());
  }
}

TEST_CASE("reciprocal of the exponential") {
  const FqPtr f = Fq::make(3);
  const USeries e = exp_series(f, 30);
  // e_C(z)/z as a series in z
  std::vector<RatFunc> shifted;
  for (unsigned i = 1; i <= 30; ++i) shifted.push_back(e.coeff(i));
  const USeries over_z(f, 29, std::move(shifted));
  CHECK(over_z * invert(over_z) == USeries::one(f, 29));
}

TEST_CASE("zeta ratios") {
  const FqPtr f3 = Fq::make(3);
  const Poly t3 = Poly::T(f3);
  const Poly br1 = pow(t3, 3) - t3;
  CHECK(zeta_ratio(f3, 2) == -RatFunc(Poly::one(f3), br1));
  CHECK(zeta_ratio(f3, 4) == RatFunc(Poly::one(f3), br1 * br1));

  const FqPtr f5 = Fq::make(5);
  const Poly t5 = Poly::T(f5);
  CHECK(zeta_ratio(f5, 4) == -RatFunc(Poly::one(f5), pow(t5, 5) - t5));

  CHECK_THROWS_AS(zeta_ratio(f3, 3), std::domain_error);
  CHECK_THROWS_AS(zeta_ratio(f3, 0), std::domain_error);
}

#include <doctest.h>

#include "drinfeld/expansions.hpp"
#include "drinfeld/io.hpp"
#include "test_util.hpp"

using namespace drinfeld;

namespace {

USeries u_mono(const FqPtr& f, unsigned e, unsigned prec) {
  return USeries::monomial(f, e, RatFunc::one(f), prec);
}

} // namespace

TEST_CASE("u_a examples at q = 3") {
  const FqPtr f = Fq::make(3);
  const Poly t = Poly::T(f);

  CHECK(u_a(Poly::one(f), 5) == u_mono(f, 1, 5));

  // u_T = u^3 - T u^5 + T^2 u^7 + O(u^8)
  const USeries ut = u_a(t, 7);
  CHECK(ut == u_mono(f, 3, 7) - RatFunc(t) * u_mono(f, 5, 7) +
                  RatFunc(t * t) * u_mono(f, 7, 7));

  // u_{T+1} has the same shape with T+1
  const Poly t1 = t + Poly::one(f);
  CHECK(u_a(t1, 7) == u_mono(f, 3, 7) - RatFunc(t1) * u_mono(f, 5, 7) +
                          RatFunc(t1 * t1) * u_mono(f, 7, 7));

  CHECK_THROWS_AS(u_a(t.scaled(2), 5), std::invalid_argument); // not monic
  CHECK_THROWS_AS(u_a(Poly::zero(f), 5), std::invalid_argument);
}

TEST_CASE("u_a satisfies its defining relation") {
  // u_a * (u^(q^d) C_a(1/u)) = u^(q^d), checked as series
  for (unsigned q : {2u, 3u, 5u}) {
    const FqPtr f = Fq::make(q);
    for (unsigned d = 0; d <= 2; ++d)
      for (const Poly& a : monic_polys(f, d)) {
        const unsigned prec = 40;
        unsigned qd = 1;
        for (unsigned i = 0; i < d; ++i) qd *= q;
        const auto c = carlitz_poly(a);
        USeries r(f, prec);
        unsigned qi = 1;
        for (unsigned i = 0; i <= d; ++i) {
          if (qd - qi <= prec && !c.coeffs[i].is_zero())
            r = r + USeries::monomial(f, qd - qi, RatFunc(c.coeffs[i]), prec);
          qi *= q;
        }
        CHECK(u_a(a, prec) * r == u_mono(f, qd, prec));
      }
  }
}

TEST_CASE("u_a integrality and congruence of exponents") {
  const FqPtr f = Fq::make(3);
  for (unsigned d = 0; d <= 4; ++d)
    for (const Poly& a : monic_polys(f, d)) {
      const USeries s = u_a(a, 100);
      REQUIRE(s.order().has_value());
      unsigned qd = 1;
      for (unsigned i = 0; i < d; ++i) qd *= 3;
      if (qd <= 100) CHECK(*s.order() == qd); // order exactly q^deg a
      for (unsigned i = 0; i <= 100; ++i) {
        if (s.coeff(i).is_zero()) continue;
        CHECK(s.coeff(i).is_polynomial()); // coefficients in A
        CHECK(i % 2 == 1);                 // exponents = 1 mod (q-1)
      }
      if (d > 2) break; // one degree-3+ sample is enough at prec 100
    }
}

TEST_CASE("expansion of f_{16,7} reproduces the three-term series") {
  const FqPtr f = Fq::make(3);
  const AExpansion f167 = make_f(f, 16, 7);
  CHECK(f167.is_power_rule());
  CHECK(f167.power_rule().e == 9);
  CHECK(f167.exponent() == 7);
  CHECK(f167.type() == 1);

  const USeries s = expand(f167, 8);
  USeries expect(f, 8);
  expect = expect + USeries::monomial(f, 3, parse_ratfunc(f, "1/(T^6 + T^4 + T^2)"), 8);
  expect = expect + USeries::monomial(f, 5, parse_ratfunc(f, "1/(T^3 + 2*T)"), 8);
  expect = expect + u_mono(f, 7, 8);
  CHECK(s == expect);
}

TEST_CASE("h touches only a = 1 below u^3") {
  const FqPtr f = Fq::make(3);
  CHECK(expand(make_h(f).expansion, 2) == u_mono(f, 1, 2));
}

TEST_CASE("empty coefficient table expands to zero") {
  const FqPtr f = Fq::make(3);
  const AExpansion zero_table(f, 1, CoeffTable{});
  CHECK(expand(zero_table, 10).is_zero_through_prec());
}

TEST_CASE("make_f validates its arguments") {
  const FqPtr f = Fq::make(3);
  CHECK_THROWS_AS(make_f(f, 7, 7), std::invalid_argument);
  CHECK_THROWS_AS(make_f(f, 3, 5), std::invalid_argument);
  // f_s = f_{2+s(q-1),1}
  CHECK(make_f_s(f, 1).expansion.power_rule().e == 3); // h has c_a = a^q
  CHECK(make_f_s(f, 2).weight == 6);
}

TEST_CASE("eisenstein normalization") {
  const FqPtr f3 = Fq::make(3);
  const Poly t3 = Poly::T(f3);
  // q=3, k=2: 1 - (T^3 - T) u^2 through u^5
  USeries e2 = eisenstein(f3, 2, 5);
  USeries expect = USeries::one(f3, 5) -
                   RatFunc(pow(t3, 3) - t3) * u_mono(f3, 2, 5);
  CHECK(e2 == expect);
  CHECK(e2.coeff(0).is_one());

  // q=5, k=4 at prec 3: the u^4 term lies beyond the window
  const FqPtr f5 = Fq::make(5);
  CHECK(eisenstein(f5, 4, 3) == USeries::one(f5, 3));

  for (unsigned q : {3u, 4u}) {
    const FqPtr f = Fq::make(q);
    const USeries g = expand(make_g(f), 30);
    CHECK(g.coeff(0).is_one());
    for (unsigned i = 0; i <= 30; ++i)
      if (!g.coeff(i).is_zero()) CHECK(i % (q - 1) == 0);
  }

  CHECK_THROWS_AS(eisenstein(f3, 3, 5), std::domain_error);
}

TEST_CASE("single cuspidality of the f_s family at the expansion level") {
  const FqPtr f = Fq::make(3);
  for (unsigned s = 1; s <= 6; ++s) {
    const USeries fs = expand(make_f_s(f, s), 30);
    REQUIRE(fs.order().has_value());
    CHECK(*fs.order() == 1);
    CHECK(fs.coeff(1).is_one());
    for (unsigned i = 0; i <= 30; ++i)
      if (!fs.coeff(i).is_zero()) CHECK(i % 2 == 1); // type 1 exponents
  }
}

TEST_CASE("truncation soundness") {
  const FqPtr f = Fq::make(3);
  const AExpansion f167 = make_f(f, 16, 7);
  const USeries coarse = expand(f167, 8);
  const USeries fine = expand(f167, 30);
  CHECK(fine.truncated(8) == coarse);
}

TEST_CASE("threaded expansion is bit-identical") {
  const FqPtr f = Fq::make(3);
  const AExpansion f5 = make_f_s(f, 5).expansion;
  const USeries a = expand(f5, 45, 1);
  const USeries b = expand(f5, 45, 4);
  CHECK(a == b);
  CHECK(useries_to_json(a) == useries_to_json(b));
}

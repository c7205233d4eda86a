#include <doctest.h>

#include "drinfeld/io.hpp"
#include "drinfeld/poly.hpp"
#include "test_util.hpp"

using namespace drinfeld;

TEST_CASE("canonical form and degree sentinel") {
  const FqPtr f = Fq::make(3);
  CHECK(Poly(f, {1, 2, 0, 0}).deg() == 1);
  CHECK(Poly::zero(f).deg() == -1);
  CHECK(Poly::zero(f).is_zero());
  CHECK(Poly::T(f).deg() == 1);
  CHECK(Poly::T(f).is_monic());
}

TEST_CASE("division with remainder on random pairs") {
  for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
    const FqPtr f = Fq::make(q);
    test::Rng rng(7 * q + 1);
    for (int it = 0; it < 100; ++it) {
      const Poly a = test::random_poly(rng, f, 12);
      const Poly b = test::random_nonzero_poly(rng, f, 6);
      const auto [quot, rem] = divmod(a, b);
      CHECK(quot * b + rem == a);
      CHECK(rem.deg() < b.deg());
    }
  }
}

TEST_CASE("gcd divides both and is monic") {
  const FqPtr f = Fq::make(5);
  test::Rng rng(99);
  for (int it = 0; it < 60; ++it) {
    const Poly a = test::random_poly(rng, f, 8);
    const Poly b = test::random_poly(rng, f, 8);
    const Poly g = gcd(a, b);
    if (a.is_zero() && b.is_zero()) {
      CHECK(g.is_zero());
      continue;
    }
    CHECK(g.is_monic());
    if (!a.is_zero()) CHECK((a % g).is_zero());
    if (!b.is_zero()) CHECK((b % g).is_zero());
  }
}

TEST_CASE("pow_char spreads exponents") {
  const FqPtr f = Fq::make(9);
  test::Rng rng(5);
  const Poly a = test::random_poly(rng, f, 4);
  CHECK(pow_char(a, 3) == a * a * a);
  CHECK(pow_char(a, 9) == pow(a, 9));
}

TEST_CASE("monic enumeration") {
  const FqPtr f = Fq::make(3);
  // only monic constant
  const auto d0 = monic_polys(f, 0);
  REQUIRE(d0.size() == 1);
  CHECK(d0[0].is_one());
  // definition of monic degree 1, in order T, T+1, T+2
  const auto d1 = monic_polys(f, 1);
  REQUIRE(d1.size() == 3);
  CHECK(to_string(d1[0]) == "T");
  CHECK(to_string(d1[1]) == "T + 1");
  CHECK(to_string(d1[2]) == "T + 2");
  // q^d many in degree 2, first T^2
  const auto d2 = monic_polys(f, 2);
  REQUIRE(d2.size() == 9);
  CHECK(to_string(d2[0]) == "T^2");
  for (const auto& a : d2) CHECK(a.is_monic());
}

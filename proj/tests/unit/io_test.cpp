#include <doctest.h>

#include "drinfeld/io.hpp"
#include "test_util.hpp"

using namespace drinfeld;

TEST_CASE("polynomial text round trip") {
  const FqPtr f3 = Fq::make(3);
  test::Rng rng(41);
  for (int it = 0; it < 50; ++it) {
    const Poly a = test::random_poly(rng, f3, 8);
    CHECK(parse_poly(f3, to_string(a)) == a);
  }
  CHECK(to_string(Poly::zero(f3)) == "0");
  CHECK(parse_poly(f3, "0").is_zero());
  CHECK(to_string(parse_poly(f3, "T^3 + 2*T")) == "T^3 + 2*T");

  // extension coefficients use the generator w
  const FqPtr f4 = Fq::make(4);
  for (int it = 0; it < 50; ++it) {
    const Poly a = test::random_poly(rng, f4, 6);
    CHECK(parse_poly(f4, to_string(a)) == a);
  }
  const Poly b(f4, {2, 3, 1}); // w + (w+1)T + T^2
  CHECK(to_string(b) == "T^2 + (w+1)*T + w");
  CHECK(parse_poly(f4, "T^2 + (w+1)*T + w") == b);
}

TEST_CASE("rational function text round trip") {
  const FqPtr f = Fq::make(3);
  test::Rng rng(43);
  for (int it = 0; it < 60; ++it) {
    const RatFunc x = test::random_ratfunc(rng, f, 6);
    CHECK(parse_ratfunc(f, to_string(x)) == x);
  }
  const Poly t = Poly::T(f);
  const RatFunc x(Poly::one(f), pow(t, 6) + pow(t, 4) + pow(t, 2));
  CHECK(to_string(x) == "1/(T^6 + T^4 + T^2)");
  CHECK(parse_ratfunc(f, "1/(T^6 + T^4 + T^2)") == x);
  // "/1" is omitted
  CHECK(to_string(RatFunc(t + Poly::one(f))) == "T + 1");
}

TEST_CASE("series text") {
  const FqPtr f = Fq::make(3);
  const Poly t = Poly::T(f);
  USeries s(f, 8);
  s = s + USeries::monomial(f, 3, RatFunc(Poly::one(f), pow(t, 6) + pow(t, 4) + t * t), 8);
  s = s + USeries::monomial(f, 5, RatFunc(Poly::one(f), pow(t, 3) + t.scaled(2)), 8);
  s = s + USeries::monomial(f, 7, RatFunc::one(f), 8);
  CHECK(to_string(s) ==
        "(1/(T^6 + T^4 + T^2))*u^3 + (1/(T^3 + 2*T))*u^5 + u^7 + O(u^9)");
  CHECK(to_string(USeries(f, 4)) == "O(u^5)");
}

TEST_CASE("series json round trip") {
  const FqPtr f = Fq::make(9);
  test::Rng rng(47);
  for (int it = 0; it < 20; ++it) {
    std::vector<RatFunc> c;
    for (unsigned i = 0; i <= 7; ++i) c.push_back(test::random_ratfunc(rng, f, 3));
    const USeries s(f, 7, std::move(c));
    const USeries back = useries_from_json(f, useries_to_json(s));
    CHECK(back.prec() == s.prec());
    CHECK(back == s);
  }
  const std::string j = useries_to_json(USeries::one(f, 2));
  CHECK(j.find("\"var\":\"u\"") != std::string::npos);
  CHECK(j.find("\"prec\":2") != std::string::npos);
}

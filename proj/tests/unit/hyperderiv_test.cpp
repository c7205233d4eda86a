#include <doctest.h>

#include "drinfeld/hyperderiv.hpp"
#include "drinfeld/io.hpp"
#include "test_util.hpp"

using namespace drinfeld;

namespace {

// Pascal's triangle mod p: independent of the Lucas route
std::vector<std::vector<unsigned>> pascal_mod(unsigned rows, unsigned p) {
  std::vector<std::vector<unsigned>> t(rows);
  for (unsigned i = 0; i < rows; ++i) {
    t[i].resize(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) t[i][j] = (t[i - 1][j - 1] + t[i - 1][j]) % p;
  }
  return t;
}

} // namespace

TEST_CASE("lucas binomials") {
  CHECK(lucas_binom(9, 3, 3) == 0);  // binom(9,3) = 84 = 0 mod 3
  CHECK(lucas_binom(4, 1, 3) == 1);  // 4 mod 3
  CHECK(lucas_binom(1234, 0, 5) == 1);
  CHECK(lucas_binom(3, 7, 3) == 0);  // bottom exceeds top

  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const auto t = pascal_mod(301, p);
    for (unsigned m = 0; m <= 300; ++m)
      for (unsigned n = 0; n <= m; ++n)
        CHECK(lucas_binom(m, n, p) == t[m][n]);
  }
}

TEST_CASE("exact binomials with the zero conventions") {
  CHECK(binom_exact(4, 2) == 6);
  CHECK(binom_exact(-2, 0) == 0);
  CHECK(binom_exact(3, 5) == 0);
  CHECK(binom_exact(61, 30) == 232714176627630544ull);
}

TEST_CASE("hyperderivative of h") {
  const FqPtr f = Fq::make(3);
  const NamedForm h = make_h(f);

  // D_6 h = sum a^9 G_7(u_a) in S_{16,1}
  const HyperResult d6 = hyper_derive(h, 6);
  CHECK(d6.image.exponent() == 7);
  CHECK(d6.image.power_rule().e == 9);
  CHECK(d6.weight == 16u);
  CHECK(d6.type == 1);
  CHECK(d6.modular == true);
  CHECK(!d6.vanished);
  CHECK(d6.image.scalar().is_one()); // binom(6,6) = 1

  // order zero is the identity
  const HyperResult d0 = hyper_derive(h, 0);
  CHECK(d0.image.exponent() == 1);
  CHECK(d0.modular == true);

  // D_1 h loses modularity: binom(4,1) = 1 mod 3
  const HyperResult d1 = hyper_derive(h, 1);
  CHECK(d1.image.exponent() == 2);
  CHECK(d1.image.power_rule().e == 4);
  CHECK(d1.weight == 6u);
  CHECK(d1.modular == false);
  CHECK(!d1.vanished);
}

TEST_CASE("weight pairing parameters") {
  const FqPtr f = Fq::make(3);
  const auto a = thm_main_params(f, 16, 7);
  REQUIRE(a.ok);
  CHECK(a.s == 1);

  const auto b = thm_main_params(f, 6, 2);
  CHECK(!b.ok);
  CHECK(b.rejection.find("2 > 3^{val_3(4)} = 1") != std::string::npos);

  const auto c = thm_main_params(f, 4, 1);
  REQUIRE(c.ok);
  CHECK(c.s == 1);

  CHECK(!thm_main_params(f, 9, 2).ok); // k-2n = 5 not a multiple of 2
}

TEST_CASE("enumerating modular hyperderivatives of h") {
  const FqPtr f = Fq::make(3);
  CHECK(enumerate_modular(f, 4, 1000) ==
        std::vector<unsigned>{6, 24, 78, 240, 726});
  CHECK(enumerate_modular(f, 4, 5).empty());
  CHECK(enumerate_modular(Fq::make(2), 5, 8) == std::vector<unsigned>{4});
}

TEST_CASE("series-level D_1") {
  const FqPtr f = Fq::make(3);
  const RatFunc one = RatFunc::one(f);
  const USeries u = USeries::monomial(f, 1, one, 6);
  CHECK(d1_series_oracle(u) == USeries::monomial(f, 2, one, 6));
  CHECK(d1_series_oracle(USeries::one(f, 6)).is_zero_through_prec());
  CHECK(d1_series_oracle(USeries::monomial(f, 3, one, 6)).is_zero_through_prec());
}

TEST_CASE("series consistency of the A-expansion action") {
  for (unsigned q : {3u, 5u}) {
    const FqPtr f = Fq::make(q);
    for (unsigned s = 1; s <= 5; ++s) {
      const NamedForm fs = make_f_s(f, s);
      CHECK(d1_series_oracle(expand(fs.expansion, 50)) ==
            expand(hyper_derive(fs, 1).image, 50));
    }
  }
}

TEST_CASE("iterativity D_1 after D_n") {
  const FqPtr f = Fq::make(3);
  const NamedForm h = make_h(f);
  for (unsigned n = 0; n <= 6; ++n) {
    if ((n + 1) % 3 == 0) continue;
    const USeries lhs = d1_series_oracle(expand(hyper_derive(h, n).image, 25));
    const USeries rhs =
        static_cast<long long>(n + 1) * expand(hyper_derive(h, n + 1).image, 25);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("the weight pairing holds at the expansion level") {
  // whenever the parameters are admissible, D_{n-1} f_s and f_{k,n} are the
  // same series
  for (unsigned q : {3u, 5u}) {
    const FqPtr f = Fq::make(q);
    for (auto [k, n] : {std::pair<unsigned, unsigned>{q + 1, 1},
                        {16, 7},
                        {2 * q + 2, 2}}) {
      const auto params = thm_main_params(f, k, n);
      if (!params.ok) continue;
      const auto image = hyper_derive(make_f_s(f, params.s), n - 1);
      CHECK(image.weight == k);
      CHECK(!image.vanished);
      CHECK(expand(image.image, 30) == expand(make_f(f, k, n), 30));
    }
  }
}

TEST_CASE("table-backed expansions derive like power rules") {
  // the same form given by an explicit coefficient table must transform
  // identically to the PowerRule route on the degrees the table covers
  const FqPtr f = Fq::make(3);
  CoeffTable table;
  table.max_deg = 1;
  for (unsigned d = 0; d <= 1; ++d)
    for (const Poly& a : monic_polys(f, d))
      table.entries.emplace_back(a, RatFunc(pow(a, 3)));
  const AExpansion tabular(f, 1, table, 4);
  const AExpansion powered = make_f(f, 4, 1); // h, c_a = a^3

  const HyperResult dt = hyper_derive(tabular, 2);
  const HyperResult dp = hyper_derive(powered, 2);
  CHECK(dt.image.exponent() == dp.image.exponent());
  CHECK(dt.weight == dp.weight);
  // below u^9 only deg a <= 1 contributes at q = 3, where the table is total
  CHECK(expand(dt.image, 8) == expand(dp.image, 8));
}

TEST_CASE("hyperderivative images keep the type congruence") {
  const FqPtr f = Fq::make(3);
  const auto d6 = hyper_derive(make_h(f), 6);
  const USeries s = expand(d6.image, 40);
  for (unsigned i = 0; i <= 40; ++i)
    if (!s.coeff(i).is_zero()) CHECK(i % 2 == d6.type % 2);
}

TEST_CASE("composition scalars") {
  // the exact integer identity behind D_i D_j = binom(i+j,i) D_{i+j}
  for (unsigned w = 1; w <= 10; ++w)
    for (unsigned i = 0; i <= 8; ++i)
      for (unsigned j = 0; j <= 8; ++j)
        CHECK(binom_exact(w + j - 1, j) * binom_exact(w + i + j - 1, i) ==
              binom_exact(i + j, i) * binom_exact(w + i + j - 1, i + j));

  const FqPtr f = Fq::make(3);
  const unsigned p = 3;
  for (unsigned w : {1u, 2u, 3u, 5u}) {
    const AExpansion base = make_f(f, w + 11, w); // any weight > exponent
    for (unsigned i = 0; i <= 8; ++i)
      for (unsigned j = 0; j <= 8; ++j) {
        const AExpansion once = hyper_derive(hyper_derive(base, j).image, i).image;
        const AExpansion direct = hyper_derive(base, i + j).image;
        const RatFunc expect =
            RatFunc::from_int(f, lucas_binom(i + j, i, p)) * direct.scalar();
        CHECK(once.scalar() == expect);
        CHECK(once.exponent() == direct.exponent());
      }
  }
}

TEST_CASE("criterion equivalence on a window") {
  // Lucas condition over 1 <= j <= n-1 at k-n versus n <= p^val_p(k-n)
  const FqPtr f = Fq::make(3);
  for (unsigned k = 3; k <= 120; ++k)
    for (unsigned n = 1; 2 * n < k; ++n) {
      if ((k - 2 * n) % 2 != 0) continue;
      bool lucas_ok = true;
      for (unsigned j = 1; j + 1 <= n && lucas_ok; ++j)
        if (lucas_binom(k - n, j, 3) != 0) lucas_ok = false;
      const bool val_ok = n <= ipow(3, val_p(k - n, 3));
      CHECK(lucas_ok == val_ok);
    }
}

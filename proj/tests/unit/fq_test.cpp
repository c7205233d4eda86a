#include <doctest.h>

#include "drinfeld/fq.hpp"
#include "test_util.hpp"

using namespace drinfeld;

TEST_CASE("prime power factorization and validation") {
  CHECK(Fq::make(2)->p() == 2);
  CHECK(Fq::make(9)->p() == 3);
  CHECK(Fq::make(9)->l() == 2);
  CHECK(Fq::make(4)->q() == 4);
  CHECK_THROWS_AS(Fq::make(1), std::invalid_argument);
  CHECK_THROWS_AS(Fq::make(6), std::invalid_argument);
  CHECK_THROWS_AS(Fq::make(12), std::invalid_argument);
}

TEST_CASE("deterministic moduli") {
  // smallest monic irreducible in the counting order
  CHECK(Fq::make(4)->modulus() == std::vector<FqElem>{1, 1, 1});  // w^2+w+1
  CHECK(Fq::make(9)->modulus() == std::vector<FqElem>{1, 0, 1});  // w^2+1
  CHECK(Fq::make(8)->modulus() == std::vector<FqElem>{1, 1, 0, 1});
  CHECK(Fq::make(5)->modulus() == std::vector<FqElem>{0, 1});
}

TEST_CASE("field axioms on random triples") {
  for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
    const FqPtr f = Fq::make(q);
    test::Rng rng(42 + q);
    for (int it = 0; it < 200; ++it) {
      const FqElem a = test::random_elem(rng, f);
      const FqElem b = test::random_elem(rng, f);
      const FqElem c = test::random_elem(rng, f);
      CHECK(f->add(a, f->add(b, c)) == f->add(f->add(a, b), c));
      CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) {
        CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK(f->pow(a, q - 1) == 1);
      }
    }
  }
}

TEST_CASE("larger fields stay exact") {
  // q = 49 and 121 exercise the table-backed extension path, q = 65521
  // the tableless large-prime path
  for (unsigned q : {49u, 121u, 65521u}) {
    const FqPtr f = Fq::make(q);
    test::Rng rng(q);
    for (int it = 0; it < 50; ++it) {
      const FqElem a = test::random_elem(rng, f);
      const FqElem b = test::random_elem(rng, f);
      CHECK(f->mul(a, b) == f->mul(b, a));
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
      CHECK(f->sub(f->add(a, b), b) == a);
    }
  }
  CHECK_THROWS_AS(Fq::make(2, 16), std::invalid_argument); // 65536 > cap
}

TEST_CASE("element text") {
  const FqPtr f9 = Fq::make(9);
  CHECK(f9->to_string(0) == "0");
  CHECK(f9->to_string(2) == "2");
  CHECK(f9->to_string(3) == "w");
  CHECK(f9->to_string(7) == "2*w+1");
  const FqPtr f3 = Fq::make(3);
  CHECK(f3->to_string(2) == "2");
  CHECK(f3->from_int(-1) == 2);
}

#include <doctest.h>

#include "drinfeld/verify.hpp"

using namespace drinfeld;

TEST_CASE("criterion filter") {
  verify::Options opts;
  opts.only = {"A1", "A8"};
  const auto results = verify::run_paper_checks(opts);
  REQUIRE(results.size() == 2);
  CHECK(results[0].id == "A1");
  CHECK(results[1].id == "A8");
  CHECK(verify::all_passed(results));
}

TEST_CASE("a sabotaged Goss seed is caught by the expansion check") {
  verify::Options opts;
  opts.only = {"A2"};
  opts.goss_seed = 0;
  const auto results = verify::run_paper_checks(opts);
  REQUIRE(results.size() == 1);
  CHECK(!results[0].passed);
  CHECK(!verify::all_passed(results));

  opts.goss_seed = 1;
  CHECK(verify::all_passed(verify::run_paper_checks(opts)));
}

TEST_CASE("empty result set never counts as passing") {
  verify::Options opts;
  opts.only = {"Z9"};
  CHECK(!verify::all_passed(verify::run_paper_checks(opts)));
}

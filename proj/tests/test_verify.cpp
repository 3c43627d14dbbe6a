#include "doctest.h"

#include "oracles.hpp"
#include "pzeros/errors.hpp"
#include "pzeros/verify.hpp"

using namespace pzeros;

TEST_CASE("brute-force partition counts") {
  const auto all = brute_force_counts(ExponentSequence::all_parts(), 6);
  CHECK(all == std::vector<mpz_class>{0, 1, 3, 3, 2, 1, 1});
  CHECK(brute_force_counts(ExponentSequence::all_parts(), 0) == std::vector<mpz_class>{1});
  const auto e = ExponentSequence::explicit_parts({1, 2, 5});
  for (long n = 1; n <= 25; ++n) {
    CAPTURE(n);
    CHECK(brute_force_counts(e, n) == oracle::enumerate_partitions(n, [](long m) { return m == 1 || m == 2 || m == 5; }));
    CHECK(brute_force_counts(e, n) == generate_one(e, n).coeffs);
  }
  CHECK_THROWS_AS(brute_force_counts(ExponentSequence::all_parts(), -1), ValidationError);
}

TEST_CASE("check groups count only gating failures") {
  CheckGroup g{1, "t", {{"a", true, ""}, {"b", false, "", false}}};
  CHECK(g.passed());
  CHECK(g.violations() == 0);
  g.checks.push_back({"c", false, ""});
  CHECK_FALSE(g.passed());
  CHECK(g.violations() == 1);
}

TEST_CASE("detail formatting is locale free and fixed width") {
  CHECK(format_double(1.0) == "1.000e+00");
  CHECK(format_double(-2.5e-13, 2) == "-2.50e-13");
}

TEST_CASE("fast criteria pass") {
  for (const CheckGroup& g : {check_special_values(), check_numeric_anchors(), check_identities(), check_beta(),
                              check_fourier_tables(), check_asymptotics(), check_combinatorics(20, 80)}) {
    CAPTURE(g.title);
    CHECK(g.passed());
    CHECK_FALSE(g.checks.empty());
    for (const auto& c : g.checks) {
      CAPTURE(c.name);
      CHECK_FALSE(c.detail.empty());
    }
  }
}

TEST_CASE("Fourier group reports the corrected reference entries") {
  const CheckGroup g = check_fourier_tables();
  bool found = false;
  for (const auto& c : g.checks)
    if (!c.gating && c.name.find("reference entries") != std::string::npos)
      found = c.detail.find("residue(1,2) b_4(3)") != std::string::npos && c.detail.find("all-parts b_2(1)") != std::string::npos;
  CHECK(found);
}

TEST_CASE("family suite on a family without an attractor") {
  const auto groups = verify_family(ExponentSequence::explicit_parts({1, 2, 5}), 40);
  REQUIRE(groups.size() == 10);
  for (const auto& g : groups) {
    CAPTURE(g.title);
    CHECK(g.passed());
  }
  CHECK_THROWS_AS(verify_family(ExponentSequence::all_parts(), 4), ValidationError);
}

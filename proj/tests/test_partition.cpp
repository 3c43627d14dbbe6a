#include "doctest.h"

#include "oracles.hpp"
#include "pzeros/errors.hpp"
#include "pzeros/partition.hpp"

using namespace pzeros;

namespace {

std::vector<long> ints(const PartitionPolynomial& F) {
  std::vector<long> v;
  for (const auto& c : F.coeffs) v.push_back(c.get_si());
  return v;
}

}  // namespace

TEST_CASE("exponent membership") {
  CHECK(ExponentSequence::all_parts().exponent(7) == 1);
  CHECK(ExponentSequence::odd_parts().exponent(4) == 0);
  CHECK(ExponentSequence::odd_parts().exponent(5) == 1);
  CHECK(ExponentSequence::quadratic_units(5).exponent(4) == 1);
  CHECK(ExponentSequence::quadratic_units(5).exponent(3) == 0);
  CHECK(ExponentSequence::explicit_parts({5, 1, 2, 2}).exponent(2) == 1);
  CHECK(ExponentSequence::explicit_parts({1, 2, 5}).exponent(6) == 0);
  CHECK(ExponentSequence::explicit_parts({5, 1, 2}).name() == "explicit(1,2,5)");
  CHECK(ExponentSequence::residue(2, 5).name() == "residue(2,5)");
  CHECK_THROWS_AS(ExponentSequence::residue(2, 4), ValidationError);
  CHECK_THROWS_AS(ExponentSequence::residue(0, 4), ValidationError);
  CHECK_THROWS_AS(ExponentSequence::quadratic_units(2), ValidationError);
  CHECK_THROWS_AS(ExponentSequence::explicit_parts({}), ValidationError);
}

TEST_CASE("small polynomials") {
  auto all = generate(ExponentSequence::all_parts(), 5);
  CHECK(ints(all[0]) == std::vector<long>{0, 1});
  CHECK(ints(all[3]) == std::vector<long>{0, 1, 2, 1, 1});
  CHECK(all[4].value_at_one() == 7);
  auto odd = generate(ExponentSequence::odd_parts(), 4);
  CHECK(ints(odd[3]) == std::vector<long>{0, 0, 1, 0, 1});
  CHECK(odd[3].origin_order() == 2);
  CHECK(odd[3].degree() == 4);
}

TEST_CASE("generation matches enumeration and both DP paths agree") {
  std::vector<ExponentSequence> fams = {
      ExponentSequence::all_parts(),        ExponentSequence::odd_parts(),
      ExponentSequence::residue(1, 3),      ExponentSequence::residue(2, 5),
      ExponentSequence::quadratic_units(5), ExponentSequence::explicit_parts({2, 3, 7})};
  for (const auto& seq : fams) {
    auto fast = generate(seq, 24);
    GenerateOptions knap;
    knap.force_knapsack = true;
    auto slow = generate(seq, 24, knap);
    for (long n = 1; n <= 24; ++n) {
      auto ref = oracle::enumerate_partitions(n, [&](long m) { return seq.exponent(m) == 1; });
      CHECK_MESSAGE(fast[n - 1].coeffs == ref, seq.name() << " n=" << n);
      CHECK_MESSAGE(slow[n - 1].coeffs == ref, seq.name() << " n=" << n);
    }
  }
  // larger sizes: the two DP paths still agree
  auto a = generate_one(ExponentSequence::residue(1, 3), 300);
  GenerateOptions knap;
  knap.force_knapsack = true;
  auto b = generate_one(ExponentSequence::residue(1, 3), 300, knap);
  CHECK(a.coeffs == b.coeffs);
}

TEST_CASE("tail series and stabilization") {
  auto h = tail_series(ExponentSequence::all_parts(), 30);
  CHECK(h[0] == 1);
  CHECK(h[1] == 1);
  auto pn = partition_numbers(30);
  for (long k = 0; k <= 30; ++k) CHECK(h[k] == pn[k]);
  auto F = generate(ExponentSequence::all_parts(), 50);
  for (long k = 0; k < 25; ++k) CHECK(F[49].coeffs[50 - k] == h[k]);
  auto ho = tail_series(ExponentSequence::odd_parts(), 40);
  auto Fo = generate(ExponentSequence::odd_parts(), 80);
  for (long k = 0; k < 40; ++k) CHECK(Fo[79].coeffs[80 - k] == ho[k]);
  CHECK_THROWS_AS(tail_series(ExponentSequence::residue(2, 3), 5), DomainError);
}

TEST_CASE("partition numbers and the F_n(1) bound") {
  auto pn = partition_numbers(100);
  CHECK(pn[5] == 7);
  CHECK(pn[100] == mpz_class("190569292"));
  auto F = generate(ExponentSequence::odd_parts(), 100);
  for (long n = 1; n <= 100; ++n) CHECK(F[n - 1].value_at_one() <= pn[n]);
}

TEST_CASE("evaluation") {
  auto F = generate(ExponentSequence::all_parts(), 4)[3];
  CHECK(eval(F, BigComplex(1.0, 0.0, 128)).re.to_double() == 5.0);
  CHECK(eval(F, BigComplex(-1.0, 0.0, 128)).re.to_double() == 1.0);
  CHECK(eval(F, BigComplex(128)).is_zero());
  BigComplex v = eval(F, BigComplex(0.0, 1.0, 128));
  // i + 2 i^2 + i^3 + i^4 = -1
  CHECK(v.re.to_double() == -1.0);
  CHECK(v.im.is_zero());
  auto G = generate_one(ExponentSequence::all_parts(), 400);
  CHECK(eval(G, BigComplex(0.5, 0.0, 128)).precision() >= static_cast<Bits>(G.max_coefficient_bits() + 64));
}

TEST_CASE("rotation support") {
  auto odd = generate(ExponentSequence::odd_parts(), 30);
  for (const auto& F : odd) CHECK(rotation_check(ExponentSequence::odd_parts(), F));
  auto r3 = generate(ExponentSequence::residue(1, 3), 30);
  for (const auto& F : r3) CHECK(rotation_check(ExponentSequence::residue(1, 3), F));
  // parts {1, 4}, n = 5: support {2, 5}
  CHECK(ints(r3[4]) == std::vector<long>{0, 0, 1, 0, 0, 1});
  auto bad = odd[3];
  bad.coeffs[3] = 1;
  CHECK_FALSE(rotation_check(ExponentSequence::odd_parts(), bad));
  CHECK_THROWS_AS(rotation_check(ExponentSequence::all_parts(), odd[3]), DomainError);
}

TEST_CASE("resource budget") {
  GenerateOptions tiny;
  tiny.memory_budget_bytes = 1024;
  CHECK_THROWS_AS(generate(ExponentSequence::all_parts(), 200, tiny), ResourceError);
  CHECK_THROWS_AS(generate(ExponentSequence::all_parts(), 0), ValidationError);
}

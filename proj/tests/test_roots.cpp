#include "doctest.h"

#include <cmath>
#include <complex>

#include "pzeros/errors.hpp"
#include "pzeros/parallel.hpp"
#include "pzeros/roots.hpp"

using namespace pzeros;

namespace {

PartitionPolynomial poly(long n, std::vector<long> c) {
  PartitionPolynomial F;
  F.n = n;
  for (long v : c) F.coeffs.emplace_back(v);
  return F;
}

std::complex<double> cd(const BigComplex& z) { return {z.re.to_double(), z.im.to_double()}; }

// Largest distance from the image of a root under `map` to the nearest root.
template <class Map>
double closure_gap(const RootSet& rs, Map map) {
  double worst = 0.0;
  for (const auto& r : rs.roots) {
    const BigComplex img = map(r);
    double best = 1e300;
    for (const auto& s : rs.roots) best = std::min(best, abs(img - s).to_double());
    worst = std::max(worst, best);
  }
  return worst;
}

double max_modulus(const RootSet& rs) {
  double m = 0.0;
  for (const auto& r : rs.roots) m = std::max(m, abs(r).to_double());
  return m;
}

}  // namespace

TEST_CASE("small partition polynomials") {
  SUBCASE("all parts F_4 = z (1 + 2z + z^2 + z^3)") {
    const auto F = generate_one(ExponentSequence::all_parts(), 4);
    RootSet rs = find_roots(F);
    CHECK(rs.n == 4);
    CHECK(rs.degree == 4);
    CHECK(rs.zero_multiplicity_at_origin == 1);
    CHECK(rs.roots.size() == 3);
    CHECK(reconstruction_error(F, rs) < 1e-10);
  }
  SUBCASE("F_1 = z") {
    RootSet rs = find_roots(generate_one(ExponentSequence::all_parts(), 1));
    CHECK(rs.roots.empty());
    CHECK(rs.zero_multiplicity_at_origin == 1);
    CHECK(rs.degree == 1);
  }
  SUBCASE("odd parts F_4 = z^2 (1 + z^2)") {
    const auto F = generate_one(ExponentSequence::odd_parts(), 4);
    RootSet rs = find_roots(F);
    CHECK(rs.zero_multiplicity_at_origin == 2);
    REQUIRE(rs.roots.size() == 2);
    // sorted by argument: i first, then -i
    CHECK(std::abs(cd(rs.roots[0]) - std::complex<double>(0, 1)) < 1e-30);
    CHECK(std::abs(cd(rs.roots[1]) - std::complex<double>(0, -1)) < 1e-30);
  }
  SUBCASE("constant polynomial is rejected") {
    CHECK_THROWS_AS(find_roots(poly(0, {3})), DomainError);
  }
}

TEST_CASE("residuals") {
  const auto F = poly(2, {-1, 0, 1});
  std::vector<BigComplex> exact{BigComplex(1.0, 0.0, 128), BigComplex(-1.0, 0.0, 128)};
  for (double r : residuals(F, exact)) CHECK(r == 0.0);
  std::vector<BigComplex> off{BigComplex(BigFloat(1.0, 128) + BigFloat::parse("1e-6", 128))};
  const double r = residuals(F, off)[0];
  // |F| / |F'| = (2e-6 + 1e-12) / (2 + 2e-6)
  CHECK(std::abs(r - 1e-6) < 1e-11);

  const auto G = generate_one(ExponentSequence::all_parts(), 60);
  RootSet rs = find_roots(G);
  for (double v : rs.residuals) CHECK(v <= rs.residual_bound);
  for (double v : residuals(G, rs.roots, PrecisionPolicy::for_bits(rs.precision_bits))) CHECK(v <= rs.residual_bound);
  CHECK(rs.residual_bound < std::ldexp(1.0, static_cast<int>(-rs.precision_bits / 2)) * 1.1);
}

TEST_CASE("initial guesses") {
  auto g = initial_guesses(poly(2, {-1, 0, 1}));
  REQUIRE(g.size() == 2);
  for (const auto& z : g) CHECK(std::abs(abs(z).to_double() - 1.0) < 1e-12);

  const auto F = generate_one(ExponentSequence::all_parts(), 100);
  g = initial_guesses(F);
  CHECK(g.size() == 99);
  for (const auto& z : g) {
    const double r = abs(z).to_double();
    CHECK(r > 0.0);
    CHECK(r <= 1.5);
  }
  // odd parts F_9 has a z^1 factor and eight nonzero roots
  CHECK(initial_guesses(generate_one(ExponentSequence::odd_parts(), 9)).size() == 8);
}

TEST_CASE("reconstruction, counts and closure") {
  struct Case {
    ExponentSequence seq;
    long n;
    long p;  // rotation order, 0 for none
  };
  const std::vector<Case> cases = {{ExponentSequence::all_parts(), 200, 0},
                                   {ExponentSequence::all_parts(), 500, 0},
                                   {ExponentSequence::odd_parts(), 300, 2},
                                   {ExponentSequence::residue(1, 3), 301, 3},
                                   {ExponentSequence::residue(1, 5), 200, 5}};
  for (const auto& c : cases) {
    CAPTURE(c.seq.name());
    CAPTURE(c.n);
    const auto F = generate_one(c.seq, c.n);
    RootSet rs = find_roots(F);
    CHECK(static_cast<long>(rs.roots.size()) + rs.zero_multiplicity_at_origin == rs.degree);
    CHECK(rs.degree == F.degree());
    CHECK(reconstruction_error(F, rs) < 1e-10);
    const double tol = 10.0 * rs.residual_bound;
    CHECK(closure_gap(rs, [](const BigComplex& z) { return conj(z); }) < tol);
    if (c.p > 0) {
      const BigComplex rot = root_of_unity(1, c.p, rs.precision_bits);
      CHECK(closure_gap(rs, [&](const BigComplex& z) { return z * rot; }) < tol);
    }
  }
}

TEST_CASE("largest root modulus shrinks with n") {
  const auto all = ExponentSequence::all_parts();
  const double m200 = max_modulus(find_roots(generate_one(all, 200)));
  const double m400 = max_modulus(find_roots(generate_one(all, 400)));
  const double m600 = max_modulus(find_roots(generate_one(all, 600)));
  CHECK(m200 > m400);
  CHECK(m400 > m600);
  CHECK(m600 < 1.1);
  CHECK(max_modulus(find_roots(generate_one(ExponentSequence::odd_parts(), 300))) < 1.1);
  CHECK(max_modulus(find_roots(generate_one(ExponentSequence::residue(1, 3), 300))) < 1.1);
}

TEST_CASE("failure modes") {
  const auto F = generate_one(ExponentSequence::all_parts(), 150);
  RootOptions o;
  o.max_double_sweeps = 0;
  o.max_sweeps = 1;
  o.max_escalations = 0;
  CHECK_THROWS_AS(find_roots(F, {}, o), ConvergenceError);
  RootOptions tiny;
  tiny.memory_budget_bytes = 1000;
  CHECK_THROWS_AS(find_roots(F, {}, tiny), ResourceError);
}

TEST_CASE("root sets do not depend on the thread count") {
  const auto F = generate_one(ExponentSequence::all_parts(), 120);
  set_thread_count(1);
  RootSet a = find_roots(F);
  set_thread_count(3);
  RootSet b = find_roots(F);
  set_thread_count(1);
  REQUIRE(a.roots.size() == b.roots.size());
  for (std::size_t i = 0; i < a.roots.size(); ++i) {
    CHECK(a.roots[i].re == b.roots[i].re);
    CHECK(a.roots[i].im == b.roots[i].im);
  }
  CHECK(a.iterations == b.iterations);
}

#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "pzeros/curve.hpp"
#include "pzeros/errors.hpp"

using namespace pzeros;

namespace {

const PrecisionPolicy kPolicy{};
const ExponentSequence kAll = ExponentSequence::all_parts();
const ExponentSequence kOdd = ExponentSequence::odd_parts();
const CurvePair k12{{1, 1}, {1, 2}};
const CurvePair k13{{1, 1}, {1, 3}};
const CurvePair k23{{1, 2}, {1, 3}};
const CurvePair k14{{1, 1}, {1, 4}};

// Reference values from 256-bit bisection runs.
constexpr double kT12 = 2.35362662840050963;
constexpr double kT13 = 2.06672966406938856;
constexpr double kT23 = 2.36170417575956844;
constexpr double kGammaSeed = 1.53291810890540651;
constexpr double kBeta = 0.97474059114646537032;
const std::complex<double> kTriple(-0.692205581387367547576, 0.691371746068865760638);

BigComplex pt(double r, double t) { return BigComplex(r * std::cos(t), r * std::sin(t), 128); }

double u_at(const CurvePair& pair, const ExponentSequence& seq, const BigComplex& z) {
  PhaseFunction a = phase_function(seq, pair.first.h, pair.first.k);
  PhaseFunction b = phase_function(seq, pair.second.h, pair.second.k);
  return (re_L(a, z, kPolicy) - re_L(b, z, kPolicy)).to_double();
}

double f(int k, const BigComplex& z) { return root_dilog(k, z, kPolicy).to_double(); }

std::complex<double> cd(const BigComplex& z) { return {z.re.to_double(), z.im.to_double()}; }

const AttractorSet& all_parts_attractor() {
  static const AttractorSet a = attractor_set(kAll, kPolicy);
  return a;
}

const AttractorSet& odd_attractor() {
  static const AttractorSet a = attractor_set(kOdd, kPolicy);
  return a;
}

}  // namespace

TEST_CASE("ode_rhs matches central differences of the level function") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rad(0.2, 0.9);
  std::uniform_real_distribution<double> ang(0.1, 1.4);
  const BigFloat h = BigFloat::parse("1e-6", 128);
  for (int i = 0; i < 100; ++i) {
    const double r = rad(rng);
    // avoid the branch rays arg z = pi/2, pi of the (1,1)|(1,2) pair
    double t = ang(rng);
    if (i % 2) t += M_PI / 2 + 0.1;
    BigComplex z = pt(r, t);
    const double slope = ode_rhs(kAll, k12, z.re.to_double(), z.im.to_double(), kPolicy);
    const PhaseFunction L1 = phase_function(kAll, 1, 1), L2 = phase_function(kAll, 1, 2);
    auto diff = [&](const BigComplex& p, const BigComplex& m, const BigFloat& step) {
      BigFloat up = re_L(L1, p, kPolicy) - re_L(L2, p, kPolicy);
      BigFloat um = re_L(L1, m, kPolicy) - re_L(L2, m, kPolicy);
      return (up - um) / (step * 2.0);
    };
    BigComplex xp(z.re + h, z.im), xm(z.re - h, z.im), yp(z.re, z.im + h), ym(z.re, z.im - h);
    BigFloat ux = diff(xp, xm, h), uy = diff(yp, ym, h);
    const double fd = (-(ux / uy)).to_double();
    CHECK(std::abs(slope - fd) <= 1e-8 * std::max(1.0, std::abs(fd)));
  }
}

TEST_CASE("ode_rhs errors and conjugation") {
  SUBCASE("real axis has a horizontal gradient") {
    CHECK_THROWS_AS(ode_rhs(kAll, k12, 0.5, 0.0, kPolicy), SingularError);
  }
  SUBCASE("branch ray of f_2") {
    CHECK_THROWS_AS(ode_rhs(kAll, k12, 0.0, 0.5, kPolicy), BranchError);
    CHECK_THROWS_AS(ode_rhs(kAll, k12, 1e-6, 0.5, kPolicy), BranchError);
  }
  SUBCASE("outside the punctured disk") {
    CHECK_THROWS_AS(ode_rhs(kAll, k12, 0.0, 0.0, kPolicy), DomainError);
    CHECK_THROWS_AS(ode_rhs(kAll, k12, 0.8, 0.8, kPolicy), DomainError);
  }
  SUBCASE("conjugate point negates the slope") {
    for (double t : {0.3, 1.0, 2.0, 2.8}) {
      for (double r : {0.3, 0.6, 0.95}) {
        const double x = r * std::cos(t), y = r * std::sin(t);
        const double a = ode_rhs(kAll, k13, x, y, kPolicy);
        const double b = ode_rhs(kAll, k13, x, -y, kPolicy);
        CHECK(std::abs(a + b) <= 1e-12 * std::max(1.0, std::abs(a)));
      }
    }
  }
}

TEST_CASE("seeds on the unit circle") {
  const double t12 = seed_angle(kAll, k12, M_PI / 2, M_PI, kPolicy).to_double();
  CHECK(std::abs(t12 - kT12) < 1e-12);
  CHECK(std::abs(seed_angle(kAll, k13, M_PI / 2, t12, kPolicy).to_double() - kT13) < 1e-12);
  CHECK(std::abs(seed_angle(kAll, k23, t12, M_PI, kPolicy).to_double() - kT23) < 1e-12);
  CHECK(std::abs(seed_angle(kOdd, k14, 0.0, M_PI / 2, kPolicy).to_double() - kGammaSeed) < 1e-12);

  BigComplex s = seed_on_circle(kAll, k12, M_PI / 2, M_PI, kPolicy);
  CHECK(std::abs(abs(s).to_double() - 1.0) < 1e-30);
  CHECK(std::abs(u_at(k12, kAll, s)) < 1e-11);

  CHECK_THROWS_AS(seed_on_circle(kAll, k12, 0.0, M_PI / 3, kPolicy), NoSignChange);
  CHECK_THROWS_AS(seed_on_circle(kAll, k12, 1.0, 0.5, kPolicy), ValidationError);
}

TEST_CASE("gamma traced from its circle seed ends at i beta") {
  BigComplex seed = seed_on_circle(kOdd, k14, 0.0, M_PI / 2, kPolicy);
  CurvePolyline g = trace(kOdd, seed, k14, {}, kPolicy);
  REQUIRE(g.points.size() > 10);
  CHECK(g.stop == StopReason::Junction);
  const std::complex<double> end = cd(g.points.back());
  CHECK(std::abs(end - std::complex<double>(0.0, kBeta)) < 1e-4);
  CHECK(g.residual_max() < 1e-9);
  for (const auto& p : g.points) {
    const double r = abs(p).to_double();
    CHECK(r > 0.0);
    CHECK(r < 1.0);
  }
}

TEST_CASE("all-parts (1,2) curve reaches the triple point junction") {
  BigComplex seed = seed_on_circle(kAll, k12, M_PI / 2, M_PI, kPolicy);
  TraceControls c;
  CurvePolyline curve = trace(kAll, seed, k12, c, kPolicy);
  CHECK(curve.stop == StopReason::Junction);
  REQUIRE(curve.junctions.size() == 1);
  CHECK(curve.junctions[0].with == CandidateIndex{1, 3});
  const BigComplex tp = triple_point(kPolicy);
  CHECK(abs(curve.junctions[0].point - tp).to_double() < 1e-8);
  CHECK(curve.residual_max() < 1e-9);

  // spacing stays within the step controls, apart from the final junction point
  for (std::size_t i = 1; i + 1 < curve.points.size(); ++i) {
    const double d = abs(curve.points[i] - curve.points[i - 1]).to_double();
    CHECK(d >= c.min_step);
    CHECK(d <= 1.5 * c.max_step);
  }
}

TEST_CASE("conjugate seed traces the conjugate polyline") {
  BigComplex seed = seed_on_circle(kAll, k23, kT12, M_PI, kPolicy);
  CurvePolyline up = trace(kAll, seed, k23, {}, kPolicy);
  CurvePolyline down = trace(kAll, conj(seed), k23, {}, kPolicy);
  REQUIRE(up.points.size() == down.points.size());
  for (std::size_t i = 0; i < up.points.size(); ++i) CHECK(abs(conj(up.points[i]) - down.points[i]).to_double() < 1e-8);
}

TEST_CASE("trace rejects bad seeds") {
  CHECK_THROWS_AS(trace(kAll, BigComplex(0.5, 0.0, 128), k12, {}, kPolicy), DomainError);
  CHECK_THROWS_AS(trace(kAll, BigComplex(1.5, 0.0, 128), k12, {}, kPolicy), DomainError);
}

TEST_CASE("beta") {
  const BigFloat b128 = find_beta(kPolicy);
  const BigFloat b256 = find_beta(PrecisionPolicy::for_bits(256));
  const double b = b128.to_double();
  CHECK(b > 0.75);
  CHECK(b < 1.0);
  CHECK(std::abs(b - kBeta) < 1e-12);
  CHECK(abs(b128 - b256).to_double() < 1e-10);
  CHECK(f(1, BigComplex(0.0, 0.7, 128)) > f(2, BigComplex(0.7, 0.0, 128)));
  // f_1(ir) crosses f_2(r) from above at beta
  CHECK(f(1, BigComplex(0.0, b - 1e-4, 128)) > f(2, BigComplex(b - 1e-4, 0.0, 128)));
  CHECK(f(1, BigComplex(0.0, b + 1e-4, 128)) < f(2, BigComplex(b + 1e-4, 0.0, 128)));
}

TEST_CASE("triple point") {
  const BigComplex z = triple_point(kPolicy);
  CHECK(std::abs(cd(z) - kTriple) < 1e-15);
  CHECK(z.re.sign() < 0);
  CHECK(z.im.sign() > 0);
  CHECK(abs(z) < 1.0);
  auto residual = [](const BigComplex& w) {
    return std::abs(f(1, w) - f(2, w)) + std::abs(f(2, w) - f(3, w));
  };
  CHECK(residual(z) < 1e-10);
  CHECK(residual(conj(z)) < 1e-10);
}

TEST_CASE("every traced point is a tie of exactly its pair") {
  const AttractorSet& A = all_parts_attractor();
  const std::complex<double> tp = kTriple;
  for (const auto& c : A.curves) {
    const std::set<CandidateIndex> want{c.pair.first, c.pair.second};
    for (std::size_t i = 0; i < c.points.size(); i += 7) {
      const std::complex<double> z = cd(c.points[i]);
      if (std::abs(z - tp) < 1e-3 || std::abs(z - std::conj(tp)) < 1e-3) continue;
      PhaseVerdict v = classify(kAll, c.points[i], 1e-9, kPolicy);
      CHECK(v.tie);
      CHECK(std::set<CandidateIndex>{v.winner, v.runner_up} == want);
    }
  }
}

TEST_CASE("attractor sets") {
  SUBCASE("all parts") {
    const AttractorSet& A = all_parts_attractor();
    CHECK(A.circle);
    CHECK(A.spokes.empty());
    CHECK(A.curves.size() == 6);
    REQUIRE(A.junctions.size() == 2);
    CHECK(std::abs(A.junctions[0] - kTriple) < 1e-8);
    // closed under conjugation: curves come in conjugate pairs
    for (std::size_t i = 0; i + 1 < A.curves.size(); i += 2) {
      const auto a = A.curves[i].to_double(), b = A.curves[i + 1].to_double();
      REQUIRE(a.size() == b.size());
      for (std::size_t j = 0; j < a.size(); ++j) CHECK(std::abs(std::conj(a[j]) - b[j]) < 1e-15);
    }
    // nothing enters the right half disk
    for (const auto& c : A.curves)
      for (const auto& z : c.to_double()) CHECK(z.real() < 1e-12);
  }
  SUBCASE("odd parts") {
    const AttractorSet& A = odd_attractor();
    REQUIRE(A.curves.size() == 4);
    REQUIRE(A.segments.size() == 1);
    CHECK(std::abs(A.segments[0].to - std::complex<double>(0.0, kBeta)) < 1e-12);
    CHECK(std::abs(A.segments[0].from - std::complex<double>(0.0, -kBeta)) < 1e-12);
    const auto g = A.curves[0].to_double();
    for (std::size_t m = 1; m < 4; ++m) {
      const auto h = A.curves[m].to_double();
      REQUIRE(h.size() == g.size());
      for (std::size_t j = 0; j < g.size(); ++j) {
        std::complex<double> want = g[j];
        if (m == 1) want = std::conj(want);
        if (m == 2) want = -want;
        if (m == 3) want = -std::conj(want);
        CHECK(std::abs(h[j] - want) < 1e-15);
      }
    }
  }
  SUBCASE("residue(1,3) spokes") {
    AttractorSet A = attractor_set(ExponentSequence::residue(1, 3), kPolicy);
    CHECK(A.curves.empty());
    REQUIRE(A.spokes.size() == 3);
    const double want[] = {M_PI / 3, M_PI, 5 * M_PI / 3};
    for (int j = 0; j < 3; ++j) {
      const auto& s = A.spokes[static_cast<std::size_t>(j)];
      CHECK(s.samples.size() == 512);
      double a = std::arg(s.to);
      if (a < 0) a += 2 * M_PI;
      CHECK(std::abs(a - want[j]) < 1e-12);
      // z^3 = -1 direction
      const std::complex<double> d = s.to / std::abs(s.to);
      CHECK(std::abs(d * d * d + 1.0) < 1e-12);
    }
  }
  SUBCASE("residue(1,5) is closed under rotation by e_5(1)") {
    AttractorSet A = attractor_set(ExponentSequence::residue(1, 5), kPolicy);
    REQUIRE(A.spokes.size() == 5);
    const std::complex<double> rot = std::polar(1.0, 2 * M_PI / 5);
    for (const auto& s : A.spokes) {
      bool found = false;
      for (const auto& t : A.spokes) found = found || std::abs(s.to * rot - t.to) < 1e-12;
      CHECK(found);
    }
  }
  SUBCASE("unsupported families") {
    CHECK_THROWS_AS(attractor_set(ExponentSequence::quadratic_units(5), kPolicy), UnsupportedFamily);
    CHECK_THROWS_AS(attractor_set(ExponentSequence::residue(2, 3), kPolicy), DomainError);
  }
}

TEST_CASE("imaginary axis is a (1,2) tie for odd parts") {
  PhaseFunction L1 = phase_function(kOdd, 1, 1), L2 = phase_function(kOdd, 1, 2);
  for (int i = 1; i < 100; ++i) {
    BigComplex z(0.0, i / 100.0, 128);
    CHECK(abs(re_L(L1, z, kPolicy) - re_L(L2, z, kPolicy)).to_double() < 1e-25);
  }
}

TEST_CASE("f_3 < f_2 on the ray arg z = 5 pi / 6") {
  for (int i = 1; i <= 100; ++i) {
    BigComplex z = polar(BigFloat(i / 100.0, 128), pi(128) * 5.0 / 6.0);
    CHECK(f(3, z) < f(2, z));
  }
}

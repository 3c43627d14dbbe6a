#include "doctest.h"

#include <cmath>
#include <random>

#include "pzeros/errors.hpp"
#include "pzeros/specfun.hpp"

using namespace pzeros;

namespace {

const PrecisionPolicy kPolicy{};  // 128 bits, 1e-25

BigFloat catalan_oracle(Bits bits) {
  BigFloat g(bits);
  mpfr_const_catalan(g.raw(), MPFR_RNDN);
  return g;
}

double err(const BigComplex& a, const BigComplex& b) { return abs(a - b).to_double(); }
double err(const BigFloat& a, const BigFloat& b) { return abs(a - b).to_double(); }

BigComplex random_disk_point(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double r = rmax * std::sqrt(u(rng));
  double t = 2.0 * M_PI * u(rng);
  return BigComplex(r * std::cos(t), r * std::sin(t), 128);
}

// Cohen, Rodriguez Villegas and Zagier acceleration of sum (-1)^n a_n in double.
double catalan_alternating_oracle() {
  const int n = 40;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0, c = -d, s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c / ((2.0 * k + 1) * (2.0 * k + 1));
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1));
  }
  return s / d;
}

}  // namespace

TEST_CASE("dilog special values") {
  const Bits b = 128;
  BigFloat p = pi(b);
  BigFloat g = catalan_oracle(b);
  CHECK(abs(dilog(BigComplex(b), kPolicy)).is_zero());
  CHECK(err(dilog(BigComplex(1.0, 0.0, b)), BigComplex(p * p / 6.0, BigFloat(b))) < 1e-25);
  CHECK(err(dilog(BigComplex(-1.0, 0.0, b)), BigComplex(-(p * p) / 12.0, BigFloat(b))) < 1e-25);
  CHECK(err(dilog(BigComplex(0.0, 1.0, b)), BigComplex(-(p * p) / 48.0, g)) < 1e-25);
  // near 1, where the reflection branch takes over
  BigComplex z(0.995, 0.003, b);
  BigComplex direct = dilog(z);
  BigComplex reflected = BigComplex(zeta2(b), BigFloat(b)) -
                         log(z) * log(BigComplex(1.0, 0.0, b) - z) -
                         dilog(BigComplex(1.0, 0.0, b) - z);
  CHECK(err(direct, reflected) < 1e-25);
}

TEST_CASE("dilog agrees with the plain power series inside |z| < 0.9") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    BigComplex z = random_disk_point(rng, 0.9);
    BigComplex sum(200), p(BigFloat(1L, 200), BigFloat(200));
    BigComplex zz = z;
    zz.set_precision(200);
    for (long n = 1; n < 1200; ++n) {
      p *= zz;
      sum += p / BigFloat(n * n, 200);
    }
    CHECK(err(dilog(z), sum) < 1e-25);
  }
}

TEST_CASE("dilog domain and precision errors") {
  CHECK_THROWS_AS(dilog(BigComplex(1.1, 0.0, 128)), DomainError);
  CHECK_THROWS_AS(root_dilog(1, BigComplex(0.0, 1.01, 128)), DomainError);
  CHECK_THROWS_AS(root_dilog(0, BigComplex(0.5, 0.0, 128)), DomainError);
  CHECK_THROWS_AS(PrecisionPolicy(64, 1e-30), PrecisionError);
  CHECK_THROWS_AS(PrecisionPolicy(40, 1e-5), ValidationError);
  CHECK_NOTHROW(PrecisionPolicy::for_bits(256));
  // boundary points just outside by less than tol are accepted
  BigFloat one_plus = BigFloat(1L, 128) + pow2(-100, 128);
  CHECK_NOTHROW(dilog(BigComplex(one_plus, BigFloat(128))));
}

TEST_CASE("clausen special values, symmetry and sine series cross-check") {
  BigFloat g = catalan_oracle(128);
  BigFloat p = pi(128);
  CHECK(abs(clausen2(0.0)).to_double() < 1e-25);
  CHECK(abs(clausen2(p)).to_double() < 1e-25);
  CHECK(err(clausen2(ldexp(p, -1)), -g) < 1e-25);
  for (double t : {0.3, 1.0, 2.0, 2.9, 4.4, 5.9}) {
    CHECK(err(clausen2(-t), -clausen2(t)) < 1e-25);
    CHECK(err(clausen2(t + 2 * M_PI), clausen2(t)) < 1e-14);
    SeriesEstimate s = clausen2_sine_series(t, 200000);
    CHECK(std::abs(clausen2(t).to_double() - s.value) <= s.tail_bound + 1e-14);
  }
  // extremum at pi/3 (this sign convention makes it a minimum)
  CHECK(clausen2(M_PI / 3).to_double() == doctest::Approx(-1.0149416064096536));
}

TEST_CASE("dilog_on_circle") {
  BigFloat p = pi(128);
  BigFloat g = catalan_oracle(128);
  CHECK(err(dilog_on_circle(BigFloat(128)), BigComplex(zeta2(128), BigFloat(128))) < 1e-25);
  CHECK(err(dilog_on_circle(p), BigComplex(-(p * p) / 12.0, BigFloat(128))) < 1e-25);
  CHECK(err(dilog_on_circle(ldexp(p, -1)), BigComplex(-(p * p) / 48.0, g)) < 1e-25);
  for (double t : {0.1, 0.7, 1.9, 3.3, 5.0, 6.2}) {
    BigFloat tb(t, 128);
    CHECK(err(dilog_on_circle(tb), dilog(expi(tb))) < 1e-25);
  }
  CHECK_THROWS_AS(dilog_on_circle(BigFloat(-0.1, 128)), DomainError);
  CHECK_THROWS_AS(dilog_on_circle(BigFloat(6.3, 128)), DomainError);
}

TEST_CASE("re_sqrt") {
  CHECK(re_sqrt(BigComplex(1.0, 0.0, 128)).to_double() == 1.0);
  CHECK(re_sqrt(BigComplex(-1.0, 0.0, 128)).is_zero());
  CHECK(re_sqrt(BigComplex(128)).is_zero());
  CHECK(re_sqrt(BigComplex(0.0, 1.0, 128)).to_double() == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("root_dilog examples") {
  const Bits b = 128;
  BigFloat p = pi(b);
  BigFloat g = catalan_oracle(b);
  for (double x : {-1.0, -0.7, -0.2, 0.0}) {
    CHECK(root_dilog(1, BigComplex(x, 0.0, b)).to_double() < 1e-25);
  }
  BigFloat p2 = p * p;
  BigFloat inner = sqrt(p2 * p2 + g * g * 2304.0) - p2;
  BigFloat closed = sqrt(inner) / (sqrt(BigFloat(6L, b)) * 4.0);
  CHECK(err(root_dilog(1, BigComplex(0.0, 1.0, b)), closed) < 1e-25);
  CHECK(std::abs(closed.to_double() - 0.605451778499274014) < 1e-16);
  CHECK(err(root_dilog(1, BigComplex(1.0, 0.0, b)), p / sqrt(BigFloat(6L, b))) < 1e-25);
  CHECK(err(root_dilog(2, BigComplex(1.0, 0.0, b)), p / (sqrt(BigFloat(6L, b)) * 2.0)) < 1e-25);
}

TEST_CASE("catalan") {
  PrecisionPolicy p53(53, 1e-13);
  CHECK(std::abs(catalan(p53).to_double() - catalan_alternating_oracle()) < 1e-12);
  CHECK(std::abs(catalan_alternating_oracle() - 0.915965594177219) < 1e-12);
  PrecisionPolicy p256 = PrecisionPolicy::for_bits(256);
  CHECK(err(catalan(p256), catalan_oracle(256)) < 1e-70);
  CHECK(abs(dilog(BigComplex(0.0, 1.0, 128)).im - catalan()).to_double() < 1e-25);
  CHECK(abs(clausen2(ldexp(pi(128), -1)) + catalan()).to_double() < 1e-25);
}

TEST_CASE("precision propagates: 256-bit dilog is accurate to 1e-70") {
  PrecisionPolicy p256(256, BigFloat::parse("1e-70", 256));
  BigComplex li = dilog(BigComplex(BigFloat(0L, 256), BigFloat(1L, 256)), p256);
  CHECK(abs(li.im - catalan_oracle(256)).to_double() < 1e-70);
  BigFloat pp = pi(256);
  CHECK(abs(li.re + pp * pp / 48.0).to_double() < 1e-70);
}

TEST_CASE("frozen high-precision anchors") {
  BigComplex li = dilog(BigComplex(0.0, 1.0, 128));
  CHECK(std::abs(arg(li).to_double() - 1.791616603912929439802556658688854) < 1e-15);
  // theta(1) = arg Li2(i); its half-angle cosine and sine
  CHECK(std::abs(std::cos(arg(li).to_double() / 2) - 0.624887967591016370406511217312) < 1e-15);
  CHECK(std::abs(std::sin(arg(li).to_double() / 2) - 0.780714434322799538641815729172) < 1e-15);
}

TEST_CASE("conjugate symmetry and the Kubert identity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    BigComplex z = random_disk_point(rng, 1.0);
    CHECK(err(dilog(conj(z)), conj(dilog(z))) < 1e-25);
  }
  for (int k = 2; k <= 6; ++k) {
    for (int i = 0; i < 10; ++i) {
      BigComplex z = random_disk_point(rng, 0.99);
      BigComplex sum(128);
      for (int m = 1; m <= k; ++m) sum += dilog(z * root_of_unity(m, k, 128));
      CHECK(err(sum, dilog(ipow(z, k)) / static_cast<double>(k)) < 1e-24);
    }
  }
}

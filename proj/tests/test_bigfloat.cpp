#include "doctest.h"

#include <sstream>

#include "pzeros/bigfloat.hpp"

using namespace pzeros;

TEST_CASE("precision propagates as the max of the operands") {
  BigFloat a(1.5, 64);
  BigFloat b(2.0, 200);
  CHECK((a + b).precision() == 200);
  CHECK((a * b).precision() == 200);
  a += b;
  CHECK(a.precision() == 64);
  CHECK(a.to_double() == 3.5);
}

TEST_CASE("parse and print round trip") {
  BigFloat x = BigFloat::parse("0.1", 256);
  BigFloat y = BigFloat::parse(x.str(), 256);
  CHECK(x == y);
  CHECK_THROWS(BigFloat::parse("abc", 64));
}

TEST_CASE("principal square root and logarithm branches") {
  const Bits bits = 128;
  BigComplex minus_one(-1.0, 0.0, bits);
  BigComplex s = sqrt(minus_one);
  CHECK(s.re.is_zero());
  CHECK(s.im.to_double() == doctest::Approx(1.0));
  // arg on the negative real axis is +pi even for a negative-zero imaginary part.
  BigComplex neg_zero(BigFloat(-2.0, bits), -BigFloat(bits));
  CHECK(arg(neg_zero).to_double() == doctest::Approx(3.141592653589793));
  BigComplex l = log(BigComplex(0.0, -1.0, bits));
  CHECK(l.im.to_double() == doctest::Approx(-1.5707963267948966));
  BigComplex z(0.3, -0.7, bits);
  BigComplex r = sqrt(z);
  BigComplex back = r * r;
  CHECK(abs(back - z).to_double() < 1e-35);
  CHECK(r.re.sign() > 0);
}

TEST_CASE("integer powers match repeated products") {
  BigComplex z(0.6, 0.7, 128);
  BigComplex p = BigComplex(1.0, 0.0, 128);
  for (int i = 0; i < 13; ++i) p *= z;
  CHECK(abs(ipow(z, 13) - p).to_double() < 1e-35);
  CHECK(abs(ipow(z, -2) * z * z - BigComplex(1.0, 0.0, 128)).to_double() < 1e-35);
}

TEST_CASE("roots of unity are exact on the axes") {
  CHECK(root_of_unity(1, 4, 128).im == BigFloat(1.0, 128));
  CHECK(root_of_unity(3, 4, 128).re.is_zero());
  CHECK(root_of_unity(-2, 4, 128).re == BigFloat(-1.0, 128));
  BigComplex w = root_of_unity(1, 3, 128);
  CHECK(abs(ipow(w, 3) - BigComplex(1.0, 0.0, 128)).to_double() < 1e-35);
}

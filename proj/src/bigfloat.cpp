#include "pzeros/bigfloat.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace pzeros {

BigFloat BigFloat::parse(std::string_view text, Bits bits) {
  BigFloat r(bits);
  std::string s(text);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: " + s);
  }
  return r;
}

std::string BigFloat::str(int digits) const {
  if (!is_finite()) {
    return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
  }
  if (digits <= 0) {
    digits = static_cast<int>(mpfr_get_str_ndigits(10, precision()));
  }
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
  auto p = os.precision();
  return os << x.str(p > 0 ? static_cast<int>(p) : 0);
}

namespace {

template <typename F>
BigFloat unary(const BigFloat& x, F f) {
  BigFloat r(x.precision());
  f(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat log1p(const BigFloat& x) { return unary(x, mpfr_log1p); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat atan(const BigFloat& x) { return unary(x, mpfr_atan); }

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

BigFloat pi(Bits bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow2(long e, Bits bits) {
  BigFloat r(bits);
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat ac = re * o.re;
  BigFloat bd = im * o.im;
  BigFloat ad = re * o.im;
  BigFloat bc = im * o.re;
  re = ac - bd;
  im = ad + bc;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  BigFloat den = norm(o);
  BigFloat nr = re * o.re + im * o.im;
  BigFloat ni = im * o.re - re * o.im;
  re = nr / den;
  im = ni / den;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
  return os << '(' << z.re << ", " << z.im << ')';
}

BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }
BigFloat arg(const BigComplex& z) {
  // atan2(+-0, negative) is +-pi; force the principal value pi on the cut.
  if (z.im.is_zero() && z.re.sign() < 0) return pi(z.precision());
  return atan2(z.im, z.re);
}
BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigComplex log(const BigComplex& z) { return {log(abs(z)), arg(z)}; }

BigComplex exp(const BigComplex& z) {
  BigFloat m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

BigComplex sqrt(const BigComplex& z) {
  Bits bits = z.precision();
  if (z.is_zero()) return BigComplex(bits);
  BigFloat m = abs(z);
  BigFloat a = m + z.re;
  BigFloat b = m - z.re;
  if (a.sign() < 0) a = BigFloat(bits);
  if (b.sign() < 0) b = BigFloat(bits);
  BigFloat re = sqrt(ldexp(a, -1));
  BigFloat im = sqrt(ldexp(b, -1));
  if (z.im.sign() < 0) im = -im;
  return {re, im};
}

BigComplex pow(const BigComplex& z, const BigFloat& s) {
  if (z.is_zero()) return BigComplex(z.precision());
  BigComplex l = log(z);
  l *= s;
  return exp(l);
}

BigComplex ipow(const BigComplex& z, long n) {
  if (n < 0) {
    BigComplex one(BigFloat(1L, z.precision()));
    return one / ipow(z, -n);
  }
  BigComplex result(BigFloat(1L, z.precision()));
  BigComplex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

BigComplex expi(const BigFloat& t) { return {cos(t), sin(t)}; }

BigComplex polar(const BigFloat& r, const BigFloat& t) { return {r * cos(t), r * sin(t)}; }

BigComplex root_of_unity(long num, long den, Bits bits) {
  if (den <= 0) throw std::invalid_argument("root_of_unity: den must be positive");
  long m = ((num % den) + den) % den;
  // Exact values on the axes.
  if (m == 0) return BigComplex(1.0, 0.0, bits);
  if (2 * m == den) return BigComplex(-1.0, 0.0, bits);
  if (4 * m == den) return BigComplex(0.0, 1.0, bits);
  if (4 * m == 3 * den) return BigComplex(0.0, -1.0, bits);
  BigFloat t = pi(bits + 16) * BigFloat(2 * m, bits + 16) / BigFloat(den, bits + 16);
  BigComplex w = expi(t);
  w.set_precision(bits);
  return w;
}

}  // namespace pzeros

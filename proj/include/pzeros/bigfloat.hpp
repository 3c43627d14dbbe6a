#pragma once

// Arbitrary-precision real and complex scalars on top of MPFR.
//
// Precision is carried per value, in bits. Binary operations produce a result
// at the larger of the two operand precisions; compound assignments keep the
// precision of the left-hand side. All rounding is to nearest.

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace pzeros {

using Bits = mpfr_prec_t;

inline constexpr Bits kDefaultBits = 128;

class BigFloat {
 public:
  BigFloat() : BigFloat(kDefaultBits) {}
  explicit BigFloat(Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double x, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  BigFloat(long x, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  BigFloat(int x, Bits bits) : BigFloat(static_cast<long>(x), bits) {}
  BigFloat(const mpz_class& x, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  BigFloat(const mpq_class& x, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }
  // Copy of `other` rounded to `bits`.
  BigFloat(const BigFloat& other, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }

  // Parses a decimal literal such as "0.25" or "-1e-30".
  static BigFloat parse(std::string_view text, Bits bits);

  BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  BigFloat& operator=(const BigFloat& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  Bits precision() const { return mpfr_get_prec(v_); }
  // Rounds the stored value to the new precision.
  void set_precision(Bits bits) { mpfr_prec_round(v_, bits, MPFR_RNDN); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation with `digits` significant digits (0: enough to round-trip).
  std::string str(int digits = 0) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent() const { return is_zero() ? -(1L << 40) : static_cast<long>(mpfr_get_exp(v_)); }

  BigFloat operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator+=(double o) { mpfr_add_d(v_, v_, o, MPFR_RNDN); return *this; }
  BigFloat& operator-=(double o) { mpfr_sub_d(v_, v_, o, MPFR_RNDN); return *this; }
  BigFloat& operator*=(double o) { mpfr_mul_d(v_, v_, o, MPFR_RNDN); return *this; }
  BigFloat& operator/=(double o) { mpfr_div_d(v_, v_, o, MPFR_RNDN); return *this; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator+(BigFloat a, double b) { return a += b; }
  friend BigFloat operator-(BigFloat a, double b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, double b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, double b) { return a /= b; }
  friend BigFloat operator+(double a, BigFloat b) { return b += a; }
  friend BigFloat operator*(double a, BigFloat b) { return b *= a; }
  friend BigFloat operator-(double a, const BigFloat& b) {
    BigFloat r(b.precision());
    mpfr_d_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(double a, const BigFloat& b) {
    BigFloat r(b.precision());
    mpfr_d_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
  friend bool operator<=(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
  friend bool operator>=(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

 private:
  mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

BigFloat sqrt(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat ldexp(const BigFloat& x, long e);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat pi(Bits bits);
// 2^e at the given precision.
BigFloat pow2(long e, Bits bits);

class BigComplex {
 public:
  BigComplex() = default;
  explicit BigComplex(Bits bits) : re(bits), im(bits) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(BigFloat r) : re(std::move(r)), im(re.precision()) {}
  BigComplex(double r, double i, Bits bits) : re(r, bits), im(i, bits) {}

  Bits precision() const { return std::max(re.precision(), im.precision()); }
  void set_precision(Bits bits) {
    re.set_precision(bits);
    im.set_precision(bits);
  }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }

  BigComplex operator-() const { return {-re, -im}; }
  BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
  BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& s) { re *= s; im *= s; return *this; }
  BigComplex& operator/=(const BigFloat& s) { re /= s; im /= s; return *this; }
  BigComplex& operator*=(double s) { re *= s; im *= s; return *this; }
  BigComplex& operator/=(double s) { re /= s; im /= s; return *this; }

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigFloat& s) { return a *= s; }
  friend BigComplex operator*(const BigFloat& s, BigComplex a) { return a *= s; }
  friend BigComplex operator/(BigComplex a, const BigFloat& s) { return a /= s; }
  friend BigComplex operator*(BigComplex a, double s) { return a *= s; }
  friend BigComplex operator*(double s, BigComplex a) { return a *= s; }
  friend BigComplex operator/(BigComplex a, double s) { return a /= s; }

  BigFloat re;
  BigFloat im;
};

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

BigFloat norm(const BigComplex& z);  // |z|^2
BigFloat abs(const BigComplex& z);
// Principal argument in (-pi, pi].
BigFloat arg(const BigComplex& z);
BigComplex conj(const BigComplex& z);
// Principal logarithm, imaginary part in (-pi, pi].
BigComplex log(const BigComplex& z);
BigComplex exp(const BigComplex& z);
// Principal square root (nonnegative real part; the negative real axis maps to
// the positive imaginary axis).
BigComplex sqrt(const BigComplex& z);
// Principal power exp(s log z) for real s; 0^s = 0 for s > 0.
BigComplex pow(const BigComplex& z, const BigFloat& s);
// Integer power by repeated squaring; no logarithm involved.
BigComplex ipow(const BigComplex& z, long n);
// e^{i t}
BigComplex expi(const BigFloat& t);
BigComplex polar(const BigFloat& r, const BigFloat& t);
// e^{2 pi i num / den}, exact for den in {1, 2, 4} and multiples handled by
// reduction of num modulo den.
BigComplex root_of_unity(long num, long den, Bits bits);

}  // namespace pzeros

#include "pzeros/specfun.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "pzeros/errors.hpp"

namespace pzeros {

PrecisionPolicy::PrecisionPolicy(Bits bits_, BigFloat tol_) : bits(bits_), tol(std::move(tol_)) {
  validate();
}

PrecisionPolicy::PrecisionPolicy(Bits bits_, double tol_) : bits(bits_), tol(tol_, std::max<Bits>(bits_, 64)) {
  validate();
}

PrecisionPolicy PrecisionPolicy::for_bits(Bits bits) {
  if (bits < 53) throw ValidationError("precision below 53 bits");
  return PrecisionPolicy(bits, pow2(8 - bits, 64));
}

void PrecisionPolicy::validate() const {
  if (bits < 53) throw ValidationError("precision must be at least 53 bits");
  if (!(tol > 0.0) || !tol.is_finite()) throw ValidationError("tolerance must be positive");
  if (tol < pow2(8 - bits, 64)) {
    throw PrecisionError("tolerance " + tol.str(6) + " is unattainable at " + std::to_string(bits) + " bits");
  }
}

namespace {

// Exact coefficients a_k = B_{2k} / (2k+1)! of the Bernoulli expansion
// Li2(z) = u - u^2/4 + sum_{k>=1} a_k u^{2k+1}, u = -ln(1 - z).
class BernoulliTable {
 public:
  // Rounded coefficients a_1..a_n at `bits`, with n large enough for the
  // series to reach 2^-bits whenever |u| <= 1.8. Entries are immutable once
  // built, so the returned reference stays valid.
  const std::vector<BigFloat>& coefficients(Bits bits) {
    {
      std::shared_lock lock(mutex_);
      auto it = rounded_.find(bits);
      if (it != rounded_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = rounded_.find(bits);
    if (it != rounded_.end()) return it->second;
    const std::size_t count = static_cast<std::size_t>(bits) / 3 + 24;
    extend_exact(count);
    std::vector<BigFloat> v;
    v.reserve(count);
    for (std::size_t k = 0; k < count; ++k) v.emplace_back(exact_[k], bits);
    return rounded_.emplace(bits, std::move(v)).first->second;
  }

 private:
  void extend_exact(std::size_t count) {
    if (exact_.size() >= count) return;
    const std::size_t nmax = 2 * count;
    // Akiyama-Tanigawa for B_0..B_nmax (B_1 = +1/2 convention; only even
    // indices are used).
    std::vector<mpq_class> row(nmax + 1);
    std::vector<mpq_class> bern(nmax + 1);
    for (std::size_t m = 0; m <= nmax; ++m) {
      row[m] = mpq_class(1, static_cast<unsigned long>(m + 1));
      for (std::size_t j = m; j >= 1; --j) {
        row[j - 1] = static_cast<unsigned long>(j) * (row[j - 1] - row[j]);
        row[j - 1].canonicalize();
      }
      bern[m] = row[0];
    }
    exact_.clear();
    mpz_class fact = 1;
    std::size_t fact_n = 1;
    for (std::size_t k = 1; k <= count; ++k) {
      while (fact_n < 2 * k + 1) {
        ++fact_n;
        fact *= static_cast<unsigned long>(fact_n);
      }
      mpq_class a = bern[2 * k] / mpq_class(fact);
      a.canonicalize();
      exact_.push_back(a);
    }
  }

  std::shared_mutex mutex_;
  std::vector<mpq_class> exact_;
  std::map<Bits, std::vector<BigFloat>> rounded_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

// True when both parts of t are below 2^e (zero counts as small).
bool below(const BigFloat& re, const BigFloat& im, long e) {
  return (re.is_zero() || re.exponent() < e) && (im.is_zero() || im.exponent() < e);
}

// (pr, pi) *= (qr, qi) in place, with t1, t2 as scratch.
void cmul_inplace(BigFloat& pr, BigFloat& pi_, const BigFloat& qr, const BigFloat& qi, BigFloat& t1, BigFloat& t2) {
  mpfr_mul(t1.raw(), pr.raw(), qi.raw(), MPFR_RNDN);
  mpfr_mul(t2.raw(), pi_.raw(), qr.raw(), MPFR_RNDN);
  mpfr_mul(pr.raw(), pr.raw(), qr.raw(), MPFR_RNDN);
  mpfr_mul(pi_.raw(), pi_.raw(), qi.raw(), MPFR_RNDN);
  mpfr_sub(pr.raw(), pr.raw(), pi_.raw(), MPFR_RNDN);
  mpfr_add(pi_.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
}

// sum_{n>=1} z^n / n^2 for |z| <= 1/2.
BigComplex dilog_power_series(const BigComplex& z, Bits w) {
  BigComplex sum = z;
  BigFloat pr(z.re, w), pim(z.im, w), tr(w), ti(w), t1(w), t2(w);
  const long e = std::max(z.re.exponent(), z.im.exponent()) - static_cast<long>(w) - 4;
  for (unsigned long n = 2; n < 100000; ++n) {
    cmul_inplace(pr, pim, z.re, z.im, t1, t2);
    mpfr_div_ui(tr.raw(), pr.raw(), n * n, MPFR_RNDN);
    mpfr_div_ui(ti.raw(), pim.raw(), n * n, MPFR_RNDN);
    mpfr_add(sum.re.raw(), sum.re.raw(), tr.raw(), MPFR_RNDN);
    mpfr_add(sum.im.raw(), sum.im.raw(), ti.raw(), MPFR_RNDN);
    if (below(tr, ti, e)) return sum;
  }
  throw PrecisionError("dilog power series did not converge");
}

// Bernoulli series in u = -ln(1 - z); requires |u| well inside 2 pi.
BigComplex dilog_bernoulli(const BigComplex& z, Bits w) {
  BigComplex one(BigFloat(1L, w));
  BigComplex u = -log(one - z);
  BigComplex u2 = u * u;
  BigComplex sum = u;
  sum.re -= ldexp(u2.re, -2);
  sum.im -= ldexp(u2.im, -2);
  const long e = std::max(u.re.exponent(), u.im.exponent()) - static_cast<long>(w) - 4;
  BigFloat pr(u.re, w), pim(u.im, w), tr(w), ti(w), t1(w), t2(w);
  const auto& a = bernoulli_table().coefficients(w);
  for (std::size_t k = 1; k <= a.size(); ++k) {
    cmul_inplace(pr, pim, u2.re, u2.im, t1, t2);
    mpfr_mul(tr.raw(), pr.raw(), a[k - 1].raw(), MPFR_RNDN);
    mpfr_mul(ti.raw(), pim.raw(), a[k - 1].raw(), MPFR_RNDN);
    mpfr_add(sum.re.raw(), sum.re.raw(), tr.raw(), MPFR_RNDN);
    mpfr_add(sum.im.raw(), sum.im.raw(), ti.raw(), MPFR_RNDN);
    if (below(tr, ti, e)) return sum;
  }
  throw PrecisionError("dilog Bernoulli series did not converge");
}

// Small |z| uses the power series directly; beyond |z| = 1/8 the Bernoulli
// series converges faster. It needs Re z <= 1/2 to keep |ln(1 - z)| <= 1.72.
BigComplex dilog_left(const BigComplex& z, Bits w) {
  if (norm(z) <= 1.0 / 64) return dilog_power_series(z, w);
  return dilog_bernoulli(z, w);
}

BigComplex dilog_kernel(const BigComplex& z0, Bits w) {
  BigComplex z = z0;
  z.set_precision(w);
  if (z.is_zero()) return BigComplex(w);
  if (norm(z) <= 1.0 / 64) return dilog_power_series(z, w);
  if (z.re <= 0.5) return dilog_bernoulli(z, w);
  // Reflection: Li2(z) = pi^2/6 - ln z ln(1 - z) - Li2(1 - z), where
  // |1 - z| < 1 and Re(1 - z) < 1/2.
  BigComplex one(BigFloat(1L, w));
  BigComplex w1 = one - z;
  BigComplex result(zeta2(w), BigFloat(w));
  if (w1.is_zero()) return result;
  result -= log(z) * log(w1);
  result -= dilog_left(w1, w);
  return result;
}

void require_finite(const BigComplex& v, const char* what) {
  if (!v.is_finite()) throw PrecisionError(std::string(what) + " produced a non-finite value");
}

}  // namespace

BigFloat zeta2(Bits bits) {
  BigFloat p = pi(bits);
  return p * p / 6.0;
}

BigComplex dilog(const BigComplex& z, const PrecisionPolicy& policy) {
  policy.validate();
  const Bits w = policy.working_bits();
  BigComplex zw = z;
  zw.set_precision(w);
  BigFloat limit = BigFloat(1L, w) + BigFloat(policy.tol, w);
  if (norm(zw) > limit * limit) {
    throw DomainError("dilog argument outside the closed unit disk: |z| = " + abs(zw).str(12));
  }
  BigComplex r = dilog_kernel(zw, w);
  require_finite(r, "dilog");
  r.set_precision(policy.bits);
  return r;
}

BigFloat clausen2(const BigFloat& t, const PrecisionPolicy& policy) {
  policy.validate();
  const Bits w = policy.working_bits();
  BigFloat two_pi = ldexp(pi(w + 32), 1);
  BigFloat s(t, w + 32);
  mpfr_fmod(s.raw(), s.raw(), two_pi.raw(), MPFR_RNDN);
  if (s.sign() < 0) s += two_pi;
  s.set_precision(w);
  BigComplex li = dilog_kernel(expi(s), w);
  require_finite(li, "clausen2");
  BigFloat r = -li.im;
  r.set_precision(policy.bits);
  return r;
}

BigFloat clausen2(double t, const PrecisionPolicy& policy) {
  return clausen2(BigFloat(t, 64), policy);
}

BigComplex dilog_on_circle(const BigFloat& t, const PrecisionPolicy& policy) {
  policy.validate();
  const Bits w = policy.working_bits();
  BigFloat tw(t, w);
  BigFloat two_pi = ldexp(pi(w), 1);
  BigFloat slack(policy.tol, w);
  if (tw < -slack || tw > two_pi + slack) {
    throw DomainError("dilog_on_circle expects 0 <= t <= 2 pi, got " + t.str(12));
  }
  BigFloat real = zeta2(w) - ldexp(tw * (two_pi - tw), -2);
  BigFloat imag = -clausen2(tw, policy);
  BigComplex r(real, imag);
  r.set_precision(policy.bits);
  return r;
}

BigFloat re_sqrt(const BigComplex& z) {
  const Bits bits = z.precision();
  if (z.is_zero()) return BigFloat(bits);
  BigFloat s = abs(z) + z.re;
  if (s.sign() <= 0) return BigFloat(bits);
  return sqrt(ldexp(s, -1));
}

BigFloat root_dilog(int k, const BigComplex& z, const PrecisionPolicy& policy) {
  if (k < 1) throw DomainError("root_dilog needs k >= 1");
  policy.validate();
  const Bits w = policy.working_bits();
  BigComplex zw = z;
  zw.set_precision(w);
  BigFloat limit = BigFloat(1L, w) + BigFloat(policy.tol, w);
  if (norm(zw) > limit * limit) {
    throw DomainError("root_dilog argument outside the closed unit disk");
  }
  BigComplex li = dilog_kernel(ipow(zw, k), w);
  require_finite(li, "root_dilog");
  BigFloat r = re_sqrt(li) / BigFloat(static_cast<long>(k), w);
  r.set_precision(policy.bits);
  return r;
}

BigFloat catalan(const PrecisionPolicy& policy) {
  policy.validate();
  const Bits w = policy.working_bits();
  // G = (pi/8) ln(2 + sqrt 3) + (3/8) sum_{n>=0} 1 / ((2n+1)^2 binom(2n, n)).
  BigFloat three(3L, w);
  BigFloat head = pi(w) * log(BigFloat(2L, w) + sqrt(three)) / 8.0;
  BigFloat a(1L, w);  // 1 / binom(2n, n)
  BigFloat sum(1L, w);
  const BigFloat eps = pow2(-static_cast<long>(w) - 4, 64);
  for (unsigned long n = 0; n < 100000; ++n) {
    mpfr_mul_ui(a.raw(), a.raw(), n + 1, MPFR_RNDN);
    mpfr_div_ui(a.raw(), a.raw(), 2 * (2 * n + 1), MPFR_RNDN);
    BigFloat term = a;
    const unsigned long odd = 2 * n + 3;
    mpfr_div_ui(term.raw(), term.raw(), odd * odd, MPFR_RNDN);
    sum += term;
    if (term < eps) break;
  }
  BigFloat g = head + sum * 3.0 / 8.0;
  g.set_precision(policy.bits);
  return g;
}

SeriesEstimate clausen2_sine_series(double t, long terms) {
  // Kahan-compensated to keep the 10^6-term sum at double accuracy.
  double sum = 0.0;
  double c = 0.0;
  for (long n = 1; n <= terms; ++n) {
    double dn = static_cast<double>(n);
    double y = std::sin(dn * t) / (dn * dn) - c;
    double s = sum + y;
    c = (s - sum) - y;
    sum = s;
  }
  double half = std::abs(std::sin(t / 2.0));
  double next = static_cast<double>(terms + 1);
  double bound = half > 0 ? 1.0 / (next * next * half) : 0.0;
  return {-sum, bound};
}

}  // namespace pzeros

#include "pzeros/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "pzeros/errors.hpp"
#include "pzeros/parallel.hpp"

namespace pzeros {

namespace {

using cdouble = std::complex<double>;

// Coefficients a_0..a_d of Q(z) = F(z) / z^m, a_0 != 0.
std::vector<mpz_class> nontrivial_part(const PartitionPolynomial& F, long& m) {
  const long deg = F.degree();
  if (deg < 1) throw DomainError("find_roots needs a polynomial of degree >= 1");
  m = F.origin_order();
  return std::vector<mpz_class>(F.coeffs.begin() + m, F.coeffs.begin() + deg + 1);
}

std::size_t max_bits(const std::vector<mpz_class>& a) {
  std::size_t b = 1;
  for (const auto& c : a)
    if (sgn(c) != 0) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
  return b;
}

// a_k / 2^e with 2^e at the scale of the largest coefficient.
std::vector<double> scaled_doubles(const std::vector<mpz_class>& a) {
  long emax = std::numeric_limits<long>::min();
  std::vector<std::pair<double, long>> parts(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    long e = 0;
    const double d = mpz_get_d_2exp(&e, a[k].get_mpz_t());
    parts[k] = {d, e};
    if (d != 0.0) emax = std::max(emax, e);
  }
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const long shift = parts[k].second - emax;
    out[k] = parts[k].first == 0.0 || shift < -1100 ? 0.0 : std::ldexp(parts[k].first, static_cast<int>(shift));
  }
  return out;
}

double log_abs(const mpz_class& c) {
  long e = 0;
  const double d = mpz_get_d_2exp(&e, c.get_mpz_t());
  return std::log(std::abs(d)) + static_cast<double>(e) * std::log(2.0);
}

std::vector<cdouble> guesses_double(const std::vector<mpz_class>& a) {
  const long d = static_cast<long>(a.size()) - 1;
  std::vector<std::pair<long, double>> pts;
  for (long k = 0; k <= d; ++k)
    if (sgn(a[k]) != 0) pts.emplace_back(k, log_abs(a[k]));
  // Upper convex hull, left to right.
  std::vector<std::pair<long, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& b = hull.back();
      const double cross = static_cast<double>(b.first - o.first) * (p.second - o.second) -
                           (b.second - o.second) * static_cast<double>(p.first - o.first);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  const double sigma = 0.7;
  std::vector<cdouble> out;
  out.reserve(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const long cnt = hull[i + 1].first - hull[i].first;
    const double radius = std::exp((hull[i].second - hull[i + 1].second) / static_cast<double>(cnt));
    for (long j = 0; j < cnt; ++j) {
      const double t = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(cnt) +
                       2.0 * M_PI * static_cast<double>(i) / static_cast<double>(d) + sigma;
      out.push_back(std::polar(radius, t));
    }
  }
  return out;
}

struct DoubleEval {
  cdouble ratio;  // p / p'
  double berr;    // |p| / sum |a_k| |z|^k
  bool ok;
};

DoubleEval eval_double(const std::vector<double>& a, cdouble z) {
  const long d = static_cast<long>(a.size()) - 1;
  if (std::abs(z) <= 1.0) {
    cdouble p = a[d], dp = 0.0;
    double s = std::abs(a[d]);
    const double az = std::abs(z);
    for (long k = d - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + a[k];
      s = s * az + std::abs(a[k]);
    }
    if (dp == 0.0) return {0.0, std::abs(p) / s, false};
    return {p / dp, std::abs(p) / s, true};
  }
  // Reversed polynomial in w = 1/z avoids overflow outside the unit disk:
  // p(z) = z^d r(w) and p / p' = z r / (d r - w r').
  const cdouble w = 1.0 / z;
  cdouble r = a[0], dr = 0.0;
  double s = std::abs(a[0]);
  const double aw = std::abs(w);
  for (long k = 1; k <= d; ++k) {
    dr = dr * w + r;
    r = r * w + a[k];
    s = s * aw + std::abs(a[k]);
  }
  const cdouble den = static_cast<double>(d) * r - w * dr;
  if (den == 0.0) return {0.0, std::abs(r) / s, false};
  return {z * r / den, std::abs(r) / s, true};
}

bool finite(cdouble z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Aberth sweeps in double precision until every root sits at rounding level
// or the sweep budget runs out. Returns the number of sweeps.
long double_stage(const std::vector<double>& a, std::vector<cdouble>& z, int max_sweeps) {
  const std::size_t d = z.size();
  const double level = 8.0 * static_cast<double>(d + 1) * std::numeric_limits<double>::epsilon();
  std::vector<char> done(d, 0);
  std::vector<cdouble> next(z);
  long sweeps = 0;
  for (int it = 0; it < max_sweeps; ++it) {
    ++sweeps;
    parallel_for(d, [&](std::size_t i) {
      next[i] = z[i];
      if (done[i]) return;
      const DoubleEval e = eval_double(a, z[i]);
      if (e.berr <= level) {
        done[i] = 1;
        return;
      }
      if (!e.ok) {
        next[i] = z[i] * cdouble(1.0001, 1e-4);
        return;
      }
      cdouble S = 0.0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) S += 1.0 / (z[i] - z[j]);
      const cdouble w = e.ratio / (1.0 - e.ratio * S);
      if (finite(w)) next[i] = z[i] - w;
    });
    std::swap(z, next);
    if (std::all_of(done.begin(), done.end(), [](char c) { return c != 0; })) break;
  }
  return sweeps;
}

// Multiprecision p(z) and p'(z) by Horner with in-place MPFR arithmetic.
class Horner {
 public:
  explicit Horner(Bits bits) : bits_(bits) {
    for (auto* v : {pr_, pi_, dr_, di_, t1_, t2_, t3_}) mpfr_init2(v, bits);
  }
  ~Horner() {
    for (auto* v : {pr_, pi_, dr_, di_, t1_, t2_, t3_}) mpfr_clear(v);
  }
  Horner(const Horner&) = delete;
  Horner& operator=(const Horner&) = delete;

  void run(const std::vector<BigFloat>& a, const BigComplex& z, BigComplex& p, BigComplex& dp) {
    const long d = static_cast<long>(a.size()) - 1;
    mpfr_srcptr zr = z.re.raw(), zi = z.im.raw();
    mpfr_set(pr_, a[d].raw(), MPFR_RNDN);
    mpfr_set_zero(pi_, 1);
    mpfr_set_zero(dr_, 1);
    mpfr_set_zero(di_, 1);
    for (long k = d - 1; k >= 0; --k) {
      // dp = dp z + p
      mpfr_mul(t1_, dr_, zr, MPFR_RNDN);
      mpfr_mul(t2_, di_, zi, MPFR_RNDN);
      mpfr_sub(t1_, t1_, t2_, MPFR_RNDN);
      mpfr_mul(t2_, dr_, zi, MPFR_RNDN);
      mpfr_mul(t3_, di_, zr, MPFR_RNDN);
      mpfr_add(di_, t2_, t3_, MPFR_RNDN);
      mpfr_add(di_, di_, pi_, MPFR_RNDN);
      mpfr_add(dr_, t1_, pr_, MPFR_RNDN);
      // p = p z + a_k
      mpfr_mul(t1_, pr_, zr, MPFR_RNDN);
      mpfr_mul(t2_, pi_, zi, MPFR_RNDN);
      mpfr_sub(t1_, t1_, t2_, MPFR_RNDN);
      mpfr_mul(t2_, pr_, zi, MPFR_RNDN);
      mpfr_mul(t3_, pi_, zr, MPFR_RNDN);
      mpfr_add(pi_, t2_, t3_, MPFR_RNDN);
      mpfr_add(pr_, t1_, a[k].raw(), MPFR_RNDN);
    }
    p = BigComplex(bits_);
    dp = BigComplex(bits_);
    mpfr_set(p.re.raw(), pr_, MPFR_RNDN);
    mpfr_set(p.im.raw(), pi_, MPFR_RNDN);
    mpfr_set(dp.re.raw(), dr_, MPFR_RNDN);
    mpfr_set(dp.im.raw(), di_, MPFR_RNDN);
  }

 private:
  Bits bits_;
  mpfr_t pr_, pi_, dr_, di_, t1_, t2_, t3_;
};

std::vector<BigFloat> rounded(const std::vector<mpz_class>& a, Bits bits) {
  std::vector<BigFloat> out;
  out.reserve(a.size());
  for (const auto& c : a) out.emplace_back(c, bits);
  return out;
}

// |p| / |p'| as a double; infinity when p' vanishes and p does not.
double newton_ratio(const BigComplex& p, const BigComplex& dp) {
  if (p.is_zero()) return 0.0;
  if (dp.is_zero()) return std::numeric_limits<double>::infinity();
  return (abs(p) / abs(dp)).to_double();
}

std::complex<double> to_cd(const BigComplex& z) { return {z.re.to_double(), z.im.to_double()}; }

void sort_roots(std::vector<BigComplex>& roots, std::vector<double>& res) {
  std::vector<std::size_t> order(roots.size());
  std::vector<std::pair<double, double>> key(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    order[i] = i;
    const cdouble z = to_cd(roots[i]);
    double a = std::arg(z);
    if (a < 0) a += 2.0 * M_PI;
    key[i] = {a, std::abs(z)};
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return key[x] < key[y]; });
  std::vector<BigComplex> r2;
  std::vector<double> s2;
  r2.reserve(roots.size());
  s2.reserve(roots.size());
  for (std::size_t i : order) {
    r2.push_back(std::move(roots[i]));
    s2.push_back(res[i]);
  }
  roots = std::move(r2);
  res = std::move(s2);
}

}  // namespace

std::vector<BigComplex> initial_guesses(const PartitionPolynomial& F) {
  long m = 0;
  const auto a = nontrivial_part(F, m);
  std::vector<BigComplex> out;
  for (const auto& z : guesses_double(a)) out.emplace_back(z.real(), z.imag(), kDefaultBits);
  return out;
}

std::vector<double> residuals(const PartitionPolynomial& F, const std::vector<BigComplex>& roots,
                              const PrecisionPolicy& policy) {
  long m = 0;
  const auto a = nontrivial_part(F, m);
  const Bits bits = std::max<Bits>(policy.bits, static_cast<Bits>(max_bits(a)) + 64);
  const auto A = rounded(a, bits);
  std::vector<double> out(roots.size());
  parallel_for(roots.size(), [&](std::size_t i) {
    Horner h(bits);
    BigComplex z = roots[i];
    z.set_precision(bits);
    BigComplex p, dp;
    h.run(A, z, p, dp);
    out[i] = newton_ratio(p, dp);
  });
  return out;
}

RootSet find_roots(const PartitionPolynomial& F, const PrecisionPolicy& policy, const RootOptions& opts) {
  policy.validate();
  RootSet rs;
  rs.n = F.n;
  long m = 0;
  const auto a = nontrivial_part(F, m);
  rs.degree = F.degree();
  rs.zero_multiplicity_at_origin = m;
  const std::size_t d = a.size() - 1;
  Bits bits = std::max<Bits>(policy.bits, static_cast<Bits>(max_bits(a)) + 64);
  rs.precision_bits = bits;
  if (d == 0) return rs;

  const Bits top = bits << opts.max_escalations;
  const std::size_t need = (d + 1) * 4 * static_cast<std::size_t>(top / 8 + 32);
  if (need > opts.memory_budget_bytes) {
    throw ResourceError("root finding at degree " + std::to_string(d) + " needs about " + std::to_string(need) +
                        " bytes");
  }

  std::vector<cdouble> zd = guesses_double(a);
  rs.iterations = double_stage(scaled_doubles(a), zd, opts.max_double_sweeps);

  std::vector<BigComplex> z;
  z.reserve(d);
  for (const auto& v : zd) z.emplace_back(v.real(), v.imag(), bits);
  std::vector<double> res(d, std::numeric_limits<double>::infinity());

  for (int level = 0;; ++level) {
    const auto A = rounded(a, bits);
    const BigFloat target = pow2(-bits / 2, 64);
    const double rel_stall = std::ldexp(1.0, static_cast<int>(-bits / 4));
    std::vector<char> done(d, 0);
    std::vector<BigComplex> next(z);
    std::vector<double> move(d, 0.0);
    int stalled = 0;
    bool converged = false;
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
      ++rs.iterations;
      std::vector<cdouble> zc(d);
      for (std::size_t i = 0; i < d; ++i) zc[i] = to_cd(z[i]);
      parallel_for(d, [&](std::size_t i) {
        move[i] = 0.0;
        if (done[i]) return;
        next[i] = z[i];
        Horner h(bits);
        BigComplex p, dp;
        h.run(A, z[i], p, dp);
        if (p.is_zero()) {
          res[i] = 0.0;
          done[i] = 1;
          return;
        }
        if (dp.is_zero()) {
          next[i] = z[i] * BigComplex(1.0001, 1e-4, bits);
          move[i] = 1.0;
          return;
        }
        BigComplex N = p / dp;
        const BigFloat an = abs(N);
        const BigFloat az = abs(z[i]);
        res[i] = an.to_double();
        // Aberth sum in double; pairs too close for double are done in full.
        cdouble S = 0.0;
        BigComplex Sbig(bits);
        bool use_big = false;
        for (std::size_t j = 0; j < d; ++j) {
          if (j == i) continue;
          const cdouble diff = zc[i] - zc[j];
          if (std::abs(diff) > 1e-8 * std::max(1.0, std::abs(zc[i]))) {
            S += 1.0 / diff;
          } else {
            Sbig += BigComplex(1.0, 0.0, bits) / (z[i] - z[j]);
            use_big = true;
          }
        }
        BigComplex Sfull(S.real(), S.imag(), bits);
        if (use_big) Sfull += Sbig;
        BigComplex one(1.0, 0.0, bits);
        BigComplex w = N / (one - N * Sfull);
        next[i] = z[i] - w;
        move[i] = (abs(w) / max(az, BigFloat(1.0, 64))).to_double();
        if (an <= target * max(az, BigFloat(1.0, 64))) done[i] = 1;
      });
      std::swap(z, next);
      for (std::size_t i = 0; i < d; ++i)
        if (done[i]) next[i] = z[i];
      if (std::all_of(done.begin(), done.end(), [](char c) { return c != 0; })) {
        converged = true;
        break;
      }
      double worst = 0.0;
      for (std::size_t i = 0; i < d; ++i)
        if (!done[i]) worst = std::max(worst, move[i]);
      stalled = worst < rel_stall ? stalled + 1 : 0;
      if (stalled >= opts.stagnation_sweeps) break;
    }
    if (converged) break;
    if (level >= opts.max_escalations) {
      throw ConvergenceError("Aberth iteration did not converge after " + std::to_string(level) +
                             " precision escalations at " + std::to_string(bits) + " bits");
    }
    bits *= 2;
    ++rs.escalations;
    for (auto& v : z) v.set_precision(bits);
  }

  rs.precision_bits = bits;
  sort_roots(z, res);
  rs.roots = std::move(z);
  rs.residuals = std::move(res);
  for (double r : rs.residuals) rs.residual_bound = std::max(rs.residual_bound, r);
  return rs;
}

double reconstruction_error(const PartitionPolynomial& F, const RootSet& rs) {
  long m = 0;
  const auto a = nontrivial_part(F, m);
  const std::size_t d = a.size() - 1;
  if (rs.roots.size() != d || rs.zero_multiplicity_at_origin != m) return std::numeric_limits<double>::infinity();
  const Bits bits = rs.precision_bits + static_cast<Bits>(d) + 64;
  std::vector<BigComplex> c(d + 1, BigComplex(bits));
  c[0] = BigComplex(1.0, 0.0, bits);
  std::size_t len = 1;
  for (const auto& r0 : rs.roots) {
    BigComplex r = r0;
    r.set_precision(bits);
    // multiply by (z - r): c_k <- c_{k-1} - r c_k, with c stored low to high
    c[len] = c[len - 1];
    for (std::size_t k = len - 1; k >= 1; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -(r * c[0]);
    ++len;
  }
  const BigFloat lead(a[d], bits);
  BigFloat err(bits), scale(bits);
  for (std::size_t k = 0; k <= d; ++k) {
    const BigFloat want = BigFloat(a[k], bits) / lead;
    err = max(err, abs(c[k] - BigComplex(want)));
    scale = max(scale, abs(want));
  }
  return (err / scale).to_double();
}

}  // namespace pzeros

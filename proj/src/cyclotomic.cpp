#include "pzeros/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "pzeros/errors.hpp"

namespace pzeros {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

// Exact division of integer polynomials by a monic divisor.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<mpz_class> q(num.size() - dn, mpz_class(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    mpz_class lead = num[i];
    q[i - dn] = lead;
    if (sgn(lead) == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= lead * den[j];
  }
  return q;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
  static std::mutex mu;
  static std::map<long, std::vector<mpz_class>> cache;
  if (n < 1) throw ValidationError("cyclotomic order must be positive");
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<mpz_class> p(n + 1, mpz_class(0));
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(long order) : n_(order), c_(order, mpq_class(0)) {
  if (order < 1) throw ValidationError("cyclotomic order must be positive");
}

Cyclotomic::Cyclotomic(long order, const mpq_class& value) : Cyclotomic(order) { c_[0] = value; }

Cyclotomic Cyclotomic::root(long order, long j) {
  Cyclotomic r(order);
  r.c_[mod(j, order)] = 1;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ != n_) throw ValidationError("cyclotomic orders differ");
  for (long i = 0; i < n_; ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.n_ != n_) throw ValidationError("cyclotomic orders differ");
  for (long i = 0; i < n_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ != n_) throw ValidationError("cyclotomic orders differ");
  std::vector<mpq_class> r(n_, mpq_class(0));
  for (long i = 0; i < n_; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (long j = 0; j < n_; ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      r[(i + j) % n_] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const mpq_class& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic r(n_);
  for (long i = 0; i < n_; ++i) r.c_[mod(-i, n_)] = c_[i];
  return r;
}

std::vector<mpq_class> Cyclotomic::canonical() const {
  const auto& phi = cyclotomic_polynomial(n_);
  const std::size_t deg = phi.size() - 1;
  std::vector<mpq_class> r = c_;
  for (std::size_t i = r.size(); i-- > deg;) {
    mpq_class lead = r[i];
    if (sgn(lead) == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= lead * phi[j];
  }
  r.resize(deg);
  for (auto& x : r) x.canonicalize();
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : canonical())
    if (sgn(x) != 0) return false;
  return true;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) return false;
  return (a - b).is_zero();
}

std::optional<std::pair<mpq_class, mpq_class>> Cyclotomic::as_gaussian_rational() const {
  Cyclotomic re = (*this + conj()) * mpq_class(1, 2);
  auto rc = re.canonical();
  for (std::size_t i = 1; i < rc.size(); ++i)
    if (sgn(rc[i]) != 0) return std::nullopt;
  mpq_class im_value = 0;
  Cyclotomic diff = *this - conj();
  if (!diff.is_zero()) {
    if (n_ % 4 != 0) return std::nullopt;
    // (x - conj x) / (2 i) = (x - conj x) * (-i / 2)
    Cyclotomic im = diff * root(n_, 3 * n_ / 4) * mpq_class(1, 2);
    auto ic = im.canonical();
    for (std::size_t i = 1; i < ic.size(); ++i)
      if (sgn(ic[i]) != 0) return std::nullopt;
    im_value = ic.empty() ? mpq_class(0) : ic[0];
  }
  return std::make_pair(rc.empty() ? mpq_class(0) : rc[0], im_value);
}

BigComplex Cyclotomic::to_complex(Bits bits) const {
  BigComplex acc(bits);
  for (long i = 0; i < n_; ++i) {
    if (sgn(c_[i]) == 0) continue;
    acc += root_of_unity(i, n_, bits) * BigFloat(c_[i], bits);
  }
  return acc;
}

Cyclotomic inverse_one_minus_root(long order, long j) {
  const long g = std::gcd(mod(j, order), order);
  const long d = order / g;  // exact multiplicative order of zeta^j
  if (d == 1) throw SingularError("1 - zeta^j vanishes");
  // (1 - w) * sum_{m<d} m w^m = -d for a primitive d-th root w.
  Cyclotomic s(order);
  for (long m = 1; m < d; ++m) s += Cyclotomic::root(order, j * m) * mpq_class(m);
  return s * mpq_class(-1, d);
}

}  // namespace pzeros

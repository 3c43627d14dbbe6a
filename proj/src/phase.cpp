#include "pzeros/phase.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "pzeros/errors.hpp"

namespace pzeros {

std::string to_string(const CandidateIndex& c) {
  std::ostringstream os;
  os << "(" << c.h << "," << c.k << ")";
  return os.str();
}

namespace {

long lcm(long a, long b) { return a / std::gcd(a, b) * b; }
long mod(long a, long n) { return ((a % n) + n) % n; }

void require_phase_family(const ExponentSequence& seq) {
  if (seq.kind() == FamilyKind::Explicit) {
    throw UnsupportedFamily("phase functions are not available for explicit part lists");
  }
}

// e_k(x) inside Q(zeta_N), k | N.
Cyclotomic ek(long N, long k, long x) { return Cyclotomic::root(N, mod(x, k) * (N / k)); }

long field_order(long k) { return lcm(k, 4); }

}  // namespace

Cyclotomic dirichlet_at_zero(const ExponentSequence& seq, long t, long k) {
  if (k < 1 || t < 1 || t > k) throw ValidationError("dirichlet_at_zero needs 1 <= t <= k");
  const long N = field_order(k);
  switch (seq.kind()) {
    case FamilyKind::AllParts: {
      // zeta(0, r/k) = 1/2 - r/k
      Cyclotomic s(N);
      for (long r = 1; r <= k; ++r) s += ek(N, k, t * r) * (mpq_class(1, 2) - mpq_class(r, k));
      return s;
    }
    case FamilyKind::Residue: {
      const long a = seq.a(), p = seq.p();
      if ((p * t) % k == 0) return ek(N, k, t * a) * (mpq_class(1, 2) - mpq_class(a, p));
      return ek(N, k, t * a) * inverse_one_minus_root(N, mod(p * t, k) * (N / k));
    }
    default:
      throw UnsupportedFamily("D_{t,k}(0) is only implemented for all-parts and residue families");
  }
}

Cyclotomic residue_at_one(const ExponentSequence& seq, long t, long k) {
  if (k < 1 || t < 1 || t > k) throw ValidationError("residue_at_one needs 1 <= t <= k");
  const long N = field_order(k);
  switch (seq.kind()) {
    case FamilyKind::AllParts:
      return Cyclotomic(N, mpq_class(t == k ? 1 : 0));
    case FamilyKind::Residue: {
      if ((seq.p() * t) % k != 0) return Cyclotomic(N);
      return ek(N, k, t * seq.a()) * mpq_class(1, seq.p());
    }
    case FamilyKind::QuadraticUnits: {
      if ((seq.p() * t) % k != 0) return Cyclotomic(N);
      return (ek(N, k, t) + ek(N, k, -t)) * mpq_class(1, seq.p());
    }
    case FamilyKind::Explicit:
      break;
  }
  throw UnsupportedFamily("residues are not available for explicit part lists");
}

std::pair<mpq_class, mpq_class> FourierData::b_value(long j) const {
  if (!has_b()) throw UnsupportedFamily("b_k is not available for this family");
  if (j < 1 || j > k) throw ValidationError("b_k index out of range");
  auto v = b[j - 1].as_gaussian_rational();
  if (!v) throw DomainError("b_k(" + std::to_string(j) + ") is not a Gaussian rational");
  return *v;
}

mpq_class FourierData::c_value(long j) const {
  if (j < 1 || j > k) throw ValidationError("c_k index out of range");
  auto v = c[j - 1].as_gaussian_rational();
  if (!v || sgn(v->second) != 0) throw DomainError("c_k(" + std::to_string(j) + ") is not rational");
  return v->first;
}

namespace {

FourierData compute_fourier(const ExponentSequence& seq, long k) {
  const long N = field_order(k);
  FourierData fd;
  fd.k = k;
  std::vector<Cyclotomic> res;
  std::vector<Cyclotomic> d0;
  const bool with_b = seq.kind() == FamilyKind::AllParts || seq.kind() == FamilyKind::Residue;
  for (long t = 1; t <= k; ++t) {
    res.push_back(residue_at_one(seq, t, k));
    if (with_b) d0.push_back(dirichlet_at_zero(seq, t, k));
  }
  for (long j = 1; j <= k; ++j) {
    Cyclotomic cs(N), bs(N);
    for (long t = 1; t <= k; ++t) {
      Cyclotomic w = ek(N, k, -t * j);
      cs += w * res[t - 1];
      if (with_b) bs += w * d0[t - 1];
    }
    fd.c.push_back(cs * mpq_class(1, k));
    if (with_b) fd.b.push_back(bs * mpq_class(1, k));
  }
  return fd;
}

}  // namespace

const FourierData& fourier_data(const ExponentSequence& seq, long k) {
  require_phase_family(seq);
  if (k < 1) throw ValidationError("fourier_data needs k >= 1");
  static std::shared_mutex mu;
  static std::map<std::pair<std::string, long>, std::unique_ptr<FourierData>> cache;
  const auto key = std::make_pair(seq.name(), k);
  {
    std::shared_lock lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto fd = std::make_unique<FourierData>(compute_fourier(seq, k));
  std::unique_lock lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  return *cache.emplace(key, std::move(fd)).first->second;
}

PhaseFunction phase_function(const ExponentSequence& seq, long h, long k) {
  require_phase_family(seq);
  if (k < 1) throw ValidationError("phase_function needs k >= 1");
  if (std::gcd(h, k) != 1) {
    throw GcdError("gcd(" + std::to_string(h) + ", " + std::to_string(k) + ") != 1");
  }
  PhaseFunction pf;
  pf.index = {k == 1 ? 1 : mod(h, k), k};
  switch (seq.kind()) {
    case FamilyKind::AllParts:
      pf.scale = mpq_class(1, k * k);
      pf.power = k;
      pf.p = 1;
      break;
    case FamilyKind::Residue:
    case FamilyKind::QuadraticUnits: {
      const long p = seq.p();
      const long g = std::gcd(k, p);
      pf.scale = mpq_class(g * g, k * k * p);
      pf.power = k / g;
      pf.p = p;
      const long hr = seq.kind() == FamilyKind::Residue ? h * seq.a() : h;
      pf.rotation = {mod(hr, g), g};
      if (seq.kind() == FamilyKind::QuadraticUnits) pf.secondary = PhaseFunction::Rotation{mod(-h, g), g};
      break;
    }
    case FamilyKind::Explicit:
      break;
  }
  pf.scale.canonicalize();
  return pf;
}

BigComplex L_squared(const PhaseFunction& pf, const BigComplex& z, const PrecisionPolicy& policy) {
  const Bits w = policy.working_bits();
  BigComplex zw = z;
  zw.set_precision(w);
  BigComplex zq = ipow(zw, pf.power);
  BigComplex sum = dilog(zq * root_of_unity(pf.rotation.num, pf.rotation.den, w), policy);
  if (pf.secondary) sum += dilog(zq * root_of_unity(pf.secondary->num, pf.secondary->den, w), policy);
  sum *= BigFloat(pf.scale, policy.bits);
  return sum;
}

BigComplex L_value(const PhaseFunction& pf, const BigComplex& z, const PrecisionPolicy& policy) {
  return sqrt(L_squared(pf, z, policy));
}

BigFloat re_L(const PhaseFunction& pf, const BigComplex& z, const PrecisionPolicy& policy) {
  return re_sqrt(L_squared(pf, z, policy));
}

BigComplex L_derivative(const PhaseFunction& pf, const BigComplex& z, const PrecisionPolicy& policy) {
  const Bits w = policy.working_bits();
  BigComplex zw = z;
  zw.set_precision(w);
  if (zw.is_zero()) throw SingularError("L' is not evaluated at the origin");
  BigComplex zq = ipow(zw, pf.power);
  BigComplex one(BigFloat(1L, w));
  BigComplex d = -log(one - zq * root_of_unity(pf.rotation.num, pf.rotation.den, w));
  if (pf.secondary) d -= log(one - zq * root_of_unity(pf.secondary->num, pf.secondary->den, w));
  d *= BigFloat(pf.scale, w) * static_cast<double>(pf.power);
  d /= zw;
  BigComplex L = L_value(pf, zw, policy);
  if (abs(L) < BigFloat(policy.tol, w)) throw SingularError("L vanishes; L' is undefined");
  BigComplex r = d / (L * 2.0);
  r.set_precision(policy.bits);
  return r;
}

BigComplex L_squared_by_definition(const ExponentSequence& seq, long h, long k, const BigComplex& z,
                                   const PrecisionPolicy& policy) {
  if (std::gcd(h, k) != 1) throw GcdError("gcd(h, k) != 1");
  const FourierData& fd = fourier_data(seq, k);
  const Bits w = policy.working_bits();
  BigComplex zw = z;
  zw.set_precision(w);
  BigComplex sum(w);
  for (long j = 1; j <= k; ++j) {
    if (fd.c[j - 1].is_zero()) continue;
    sum += fd.c[j - 1].to_complex(w) * dilog(zw * root_of_unity(j * h, k, w), policy);
  }
  sum.set_precision(policy.bits);
  return sum;
}

long wedge_index(const ExponentSequence& seq, const CandidateIndex& c) {
  if (seq.kind() != FamilyKind::Residue || seq.p() < 3) throw UnsupportedFamily("wedges need Residue(a, p), p >= 3");
  const long p = seq.p();
  if (p % c.k != 0) throw DomainError("candidate " + to_string(c) + " is not a wedge function");
  return mod(c.h * (p / c.k), p) % p;
}

CandidateIndex wedge_candidate(const ExponentSequence& seq, long h) {
  if (seq.kind() != FamilyKind::Residue || seq.p() < 3) throw UnsupportedFamily("wedges need Residue(a, p), p >= 3");
  const long p = seq.p();
  h = mod(h, p);
  const long g = std::gcd(h, p);  // gcd(0, p) = p
  const long k = p / g;
  return {k == 1 ? 1 : h / g, k};
}

namespace {

bool same_function(const PhaseFunction& a, const PhaseFunction& b) {
  if (a.power != b.power || a.scale != b.scale) return false;
  auto key = [](const PhaseFunction& f) {
    std::vector<std::pair<long, long>> v{{f.rotation.num, f.rotation.den}};
    if (f.secondary) v.emplace_back(f.secondary->num, f.secondary->den);
    std::sort(v.begin(), v.end());
    return v;
  };
  return key(a) == key(b);
}

std::vector<CandidateIndex> quadratic_candidates(const ExponentSequence& seq) {
  static std::mutex mu;
  static std::map<long, std::vector<CandidateIndex>> cache;
  const long p = seq.p();
  {
    std::lock_guard lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
  }
  std::vector<PhaseFunction> all;
  for (long k = 1; k <= 3 * p; ++k) {
    for (long h = 1; h <= std::max<long>(1, k - 1); ++h) {
      if (std::gcd(h, k) != 1) continue;
      PhaseFunction pf = phase_function(seq, h, k);
      bool dup = false;
      for (const auto& q : all) dup = dup || same_function(q, pf);
      if (!dup) all.push_back(pf);
    }
  }
  // Keep the functions that win (or nearly win) somewhere on a coarse grid.
  const PrecisionPolicy coarse = PrecisionPolicy::for_bits(64);
  std::vector<char> keep(all.size(), 0);
  keep[0] = 1;
  for (int ir = 1; ir <= 19; ++ir) {
    const double r = 0.05 * ir;
    for (int it = 0; it < 72; ++it) {
      const double t = 2.0 * M_PI * (it + 0.5) / 72.0;
      BigComplex z(r * std::cos(t), r * std::sin(t), 64);
      std::vector<double> v;
      for (const auto& pf : all) v.push_back(re_L(pf, z, coarse).to_double());
      const double best = *std::max_element(v.begin(), v.end());
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] >= best - 1e-6) keep[i] = 1;
    }
  }
  std::vector<CandidateIndex> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (keep[i]) out.push_back(all[i].index);
  std::sort(out.begin(), out.end());
  std::lock_guard lock(mu);
  cache.emplace(p, out);
  return out;
}

}  // namespace

std::vector<CandidateIndex> candidates(const ExponentSequence& seq) {
  switch (seq.kind()) {
    case FamilyKind::AllParts:
      return {{1, 1}, {1, 2}, {1, 3}};
    case FamilyKind::Residue: {
      if (seq.p() == 2) return {{1, 1}, {1, 2}, {1, 4}};
      std::vector<CandidateIndex> out;
      for (long h = 0; h < seq.p(); ++h) out.push_back(wedge_candidate(seq, h));
      return out;
    }
    case FamilyKind::QuadraticUnits:
      return quadratic_candidates(seq);
    case FamilyKind::Explicit:
      break;
  }
  throw UnsupportedFamily("no candidate list for explicit part lists");
}

PhaseVerdict classify(const ExponentSequence& seq, const BigComplex& z, double boundary_tol,
                      const PrecisionPolicy& policy) {
  if (z.is_zero()) throw DomainError("classify is undefined at the origin");
  if (abs(z) >= 1.0) throw DomainError("classify needs |z| < 1");
  std::vector<CandidateIndex> cand = candidates(seq);
  std::sort(cand.begin(), cand.end());
  std::vector<BigFloat> vals;
  vals.reserve(cand.size());
  for (const auto& c : cand) vals.push_back(re_L(phase_function(seq, c.h, c.k), z, policy));
  std::size_t best = 0;
  for (std::size_t i = 1; i < cand.size(); ++i)
    if (vals[i] > vals[best]) best = i;
  std::size_t second = best == 0 ? 1 : 0;
  for (std::size_t i = 0; i < cand.size(); ++i)
    if (i != best && vals[i] > vals[second]) second = i;
  PhaseVerdict v;
  v.winner = cand[best];
  v.best_value = vals[best].to_double();
  if (cand.size() > 1) {
    v.runner_up = cand[second];
    v.margin = (vals[best] - vals[second]).to_double();
  } else {
    v.runner_up = cand[best];
    v.margin = v.best_value;
  }
  v.tie = v.margin < boundary_tol;
  return v;
}

BigComplex omega(const ExponentSequence& seq, long h, long k, long n, const BigComplex& z,
                 const PrecisionPolicy& policy) {
  if (std::gcd(h, k) != 1) throw GcdError("gcd(h, k) != 1");
  if (abs(z) >= 1.0) throw DomainError("omega needs |z| < 1");
  const FourierData& fd = fourier_data(seq, k);
  if (!fd.has_b()) throw UnsupportedFamily("omega needs b_k, unavailable for this family");
  const Bits w = policy.working_bits();
  BigComplex zw = z;
  zw.set_precision(w);
  BigComplex one(BigFloat(1L, w));
  BigComplex logsum(w);
  for (long j = 1; j <= k; ++j) {
    auto [bre, bim] = fd.b_value(j);
    if (sgn(bre) == 0 && sgn(bim) == 0) continue;
    BigComplex s(BigFloat(-bre, w), BigFloat(-bim, w));
    logsum += s * log(one - zw * root_of_unity(h * j, k, w));
  }
  BigComplex r = root_of_unity(-mod(h * n, k), k, w) * exp(logsum);
  r.set_precision(policy.bits);
  return r;
}

BigComplex Omega(const ExponentSequence& seq, long k, long n, const BigComplex& z, const PrecisionPolicy& policy) {
  BigComplex s(policy.bits);
  for (long h = 1; h <= std::max<long>(1, k - 1); ++h)
    if (std::gcd(h, k) == 1) s += omega(seq, h, k, n, z, policy);
  return s;
}

AsymptoticValue asymptotic_estimate(const ExponentSequence& seq, const CandidateIndex& winner, long n,
                                    const BigComplex& z, const PrecisionPolicy& policy) {
  if (n < 1) throw ValidationError("asymptotic_estimate needs n >= 1");
  PhaseVerdict v = classify(seq, z, kDefaultBoundaryTol, policy);
  if (v.tie) throw DomainError("point lies on a phase boundary (margin " + std::to_string(v.margin) + ")");
  const long k = winner.k;
  PhaseFunction pf = phase_function(seq, winner.h, k);
  BigComplex pre(policy.bits);
  for (long h = 1; h <= std::max<long>(1, k - 1); ++h) {
    if (std::gcd(h, k) != 1) continue;
    if (same_function(phase_function(seq, h, k), pf)) pre += omega(seq, h, k, n, z, policy);
  }
  const Bits w = policy.working_bits();
  BigComplex L2 = L_squared(pf, z, policy);
  BigComplex L = sqrt(L2);
  BigFloat nn(n, w);
  BigFloat root_n = sqrt(nn);
  BigFloat denom = sqrt(pi(w)) * 2.0 * exp(log(nn) * 0.75);
  BigComplex est = pre * sqrt(L) * exp(L * (root_n * 2.0)) / denom;
  AsymptoticValue out{est, false};
  const BigFloat tiny(policy.tol, w);
  if (abs(L2.im) <= tiny && L2.re <= 0.0) {
    out.branch_cut = true;
    out.value = BigComplex(est.re * 2.0, BigFloat(w));
  }
  out.value.set_precision(policy.bits);
  return out;
}

}  // namespace pzeros

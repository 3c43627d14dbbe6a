#include "pzeros/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pzeros/errors.hpp"

namespace pzeros {

ExponentSequence ExponentSequence::all_parts() { return ExponentSequence(); }

ExponentSequence ExponentSequence::residue(long a, long p) {
  if (p < 2) throw ValidationError("residue family needs p >= 2");
  if (a < 1 || a > p) throw ValidationError("residue family needs 1 <= a <= p");
  if (std::gcd(a, p) != 1) throw ValidationError("residue family needs gcd(a, p) = 1");
  ExponentSequence s;
  s.kind_ = FamilyKind::Residue;
  s.a_ = a;
  s.p_ = p;
  return s;
}

ExponentSequence ExponentSequence::quadratic_units(long p) {
  if (p < 3) throw ValidationError("quadratic-units family needs p >= 3");
  ExponentSequence s;
  s.kind_ = FamilyKind::QuadraticUnits;
  s.p_ = p;
  return s;
}

ExponentSequence ExponentSequence::explicit_parts(std::vector<long> parts) {
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  if (parts.empty()) throw ValidationError("explicit family needs at least one part");
  if (parts.front() < 1) throw ValidationError("explicit parts must be positive");
  ExponentSequence s;
  s.kind_ = FamilyKind::Explicit;
  s.parts_ = std::move(parts);
  return s;
}

int ExponentSequence::exponent(long m) const {
  if (m < 1) return 0;
  switch (kind_) {
    case FamilyKind::AllParts:
      return 1;
    case FamilyKind::Residue:
      return m % p_ == a_ % p_ ? 1 : 0;
    case FamilyKind::QuadraticUnits: {
      long r = m % p_;
      return (r == 1 || r == p_ - 1) ? 1 : 0;
    }
    case FamilyKind::Explicit:
      return std::binary_search(parts_.begin(), parts_.end(), m) ? 1 : 0;
  }
  return 0;
}

std::vector<long> ExponentSequence::parts_up_to(long limit) const {
  std::vector<long> out;
  if (kind_ == FamilyKind::Explicit) {
    for (long m : parts_)
      if (m <= limit) out.push_back(m);
    return out;
  }
  for (long m = 1; m <= limit; ++m)
    if (exponent(m)) out.push_back(m);
  return out;
}

std::string ExponentSequence::name() const {
  std::ostringstream os;
  switch (kind_) {
    case FamilyKind::AllParts:
      return "all-parts";
    case FamilyKind::Residue:
      os << "residue(" << a_ << "," << p_ << ")";
      break;
    case FamilyKind::QuadraticUnits:
      os << "quadratic-units(" << p_ << ")";
      break;
    case FamilyKind::Explicit:
      os << "explicit(";
      for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
      os << ")";
      break;
  }
  return os.str();
}

long PartitionPolynomial::degree() const {
  for (long k = static_cast<long>(coeffs.size()) - 1; k >= 0; --k)
    if (sgn(coeffs[k]) != 0) return k;
  return -1;
}

long PartitionPolynomial::origin_order() const {
  for (long k = 0; k < static_cast<long>(coeffs.size()); ++k)
    if (sgn(coeffs[k]) != 0) return k;
  return -1;
}

const mpz_class& PartitionPolynomial::coefficient(long k) const {
  static const mpz_class zero = 0;
  if (k < 0 || k >= static_cast<long>(coeffs.size())) return zero;
  return coeffs[k];
}

mpz_class PartitionPolynomial::value_at_one() const {
  mpz_class s = 0;
  for (const auto& c : coeffs) s += c;
  return s;
}

std::size_t PartitionPolynomial::max_coefficient_bits() const {
  std::size_t bits = 0;
  for (const auto& c : coeffs)
    if (sgn(c) != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

namespace {

// Rows w = 0..N of c(w, k), row w holding k = 0..w / min_part.
class Table {
 public:
  Table(long N, long min_part) : rows_(N + 1), min_part_(min_part) {
    for (long w = 0; w <= N; ++w) rows_[w].resize(w / min_part + 1);
    rows_[0][0] = 1;
  }
  const mpz_class& get(long w, long k) const {
    static const mpz_class zero = 0;
    if (w < 0 || k < 0) return zero;
    const auto& row = rows_[w];
    return k < static_cast<long>(row.size()) ? row[k] : zero;
  }
  std::vector<mpz_class>& row(long w) { return rows_[w]; }
  long width(long w) const { return static_cast<long>(rows_[w].size()); }

 private:
  std::vector<std::vector<mpz_class>> rows_;
  long min_part_;
};

long min_part(const ExponentSequence& seq, long N) {
  auto parts = seq.parts_up_to(std::max<long>(N, 1));
  if (parts.empty()) return std::max<long>(N, 1);
  return parts.front();
}

// Smallest part a and common difference p when S is an arithmetic progression.
bool progression(const ExponentSequence& seq, long& a, long& p) {
  if (seq.kind() == FamilyKind::AllParts) {
    a = 1;
    p = 1;
    return true;
  }
  if (seq.kind() == FamilyKind::Residue) {
    a = seq.a();
    p = seq.p();
    return true;
  }
  return false;
}

Table build_table(const ExponentSequence& seq, long N, const GenerateOptions& opts) {
  if (N < 1) throw ValidationError("generate needs N >= 1");
  const std::size_t need = estimate_table_bytes(seq, N);
  if (need > opts.memory_budget_bytes) {
    throw ResourceError("coefficient table for N = " + std::to_string(N) + " needs about " +
                        std::to_string(need >> 20) + " MiB, budget is " +
                        std::to_string(opts.memory_budget_bytes >> 20) + " MiB");
  }
  Table t(N, min_part(seq, N));
  long a = 0, p = 0;
  if (!opts.force_knapsack && progression(seq, a, p)) {
    // Either the smallest allowed part a occurs (remove one copy), or every
    // part is at least a + p (subtract p from each of the k parts).
    for (long w = 1; w <= N; ++w) {
      auto& row = t.row(w);
      for (long k = 1; k < t.width(w); ++k) {
        row[k] = t.get(w - a, k - 1);
        if (w - k * p >= 0) row[k] += t.get(w - k * p, k);
      }
    }
    return t;
  }
  // Unbounded knapsack over the allowed parts in increasing order.
  for (long m : seq.parts_up_to(N)) {
    for (long w = m; w <= N; ++w) {
      auto& row = t.row(w);
      const long kmax = std::min<long>(t.width(w) - 1, t.width(w - m));
      for (long k = kmax; k >= 1; --k) {
        const mpz_class& prev = t.get(w - m, k - 1);
        if (sgn(prev) != 0) row[k] += prev;
      }
    }
  }
  return t;
}

}  // namespace

std::size_t estimate_table_bytes(const ExponentSequence& seq, long N) {
  if (N < 1) return 0;
  const double mp = static_cast<double>(min_part(seq, N));
  const double entries = static_cast<double>(N + 1) * (static_cast<double>(N) / mp + 2.0) / 2.0;
  // Hardy-Ramanujan growth bounds every family's coefficients.
  const double bits = M_PI * std::sqrt(2.0 * N / 3.0) / std::log(2.0);
  const double limbs = bits / 64.0 / 2.0 + 1.0;
  const double bytes = entries * (sizeof(mpz_class) + 8.0 * limbs) +
                       static_cast<double>(N + 1) * sizeof(std::vector<mpz_class>);
  return static_cast<std::size_t>(bytes);
}

std::vector<PartitionPolynomial> generate(const ExponentSequence& seq, long N,
                                          const GenerateOptions& opts) {
  Table t = build_table(seq, N, opts);
  std::vector<PartitionPolynomial> out;
  out.reserve(N);
  for (long w = 1; w <= N; ++w) {
    PartitionPolynomial F;
    F.n = w;
    F.coeffs.assign(w + 1, mpz_class(0));
    auto& row = t.row(w);
    for (long k = 0; k < t.width(w); ++k) F.coeffs[k] = std::move(row[k]);
    out.push_back(std::move(F));
  }
  return out;
}

PartitionPolynomial generate_one(const ExponentSequence& seq, long n, const GenerateOptions& opts) {
  Table t = build_table(seq, n, opts);
  PartitionPolynomial F;
  F.n = n;
  F.coeffs.assign(n + 1, mpz_class(0));
  auto& row = t.row(n);
  for (long k = 0; k < t.width(n); ++k) F.coeffs[k] = std::move(row[k]);
  return F;
}

std::vector<mpz_class> tail_series(const ExponentSequence& seq, long K, const GenerateOptions& opts) {
  if (K < 0) throw ValidationError("tail_series needs K >= 0");
  if (!seq.has_unit_part()) throw DomainError("tail series requires part 1 to be allowed");
  const double bytes = static_cast<double>(K + 1) * (sizeof(mpz_class) + 16.0 + std::sqrt(K + 1.0));
  if (bytes > static_cast<double>(opts.memory_budget_bytes)) throw ResourceError("tail series exceeds memory budget");
  std::vector<mpz_class> h(K + 1, mpz_class(0));
  h[0] = 1;
  // Factor (1 - z^m)^{-1} for every m with m + 1 allowed.
  for (long m = 1; m <= K; ++m) {
    if (!seq.exponent(m + 1)) continue;
    for (long j = m; j <= K; ++j) h[j] += h[j - m];
  }
  return h;
}

BigComplex eval(const PartitionPolynomial& F, const BigComplex& z, const PrecisionPolicy& policy) {
  policy.validate();
  const Bits w = std::max<Bits>(policy.bits, static_cast<Bits>(F.max_coefficient_bits())) + 64;
  BigComplex zw = z;
  zw.set_precision(w);
  BigComplex acc(w);
  for (long k = F.degree(); k >= 0; --k) {
    acc *= zw;
    acc.re += BigFloat(F.coeffs[k], w);
  }
  if (!acc.is_finite()) throw PrecisionError("polynomial evaluation overflowed");
  return acc;
}

bool rotation_check(const ExponentSequence& seq, const PartitionPolynomial& F) {
  if (seq.kind() != FamilyKind::Residue) throw DomainError("rotation_check needs a residue family");
  const long p = seq.p();
  const long target = ((F.n % p) + p) % p;
  for (long k = 0; k < static_cast<long>(F.coeffs.size()); ++k) {
    if (sgn(F.coeffs[k]) == 0) continue;
    if ((k * seq.a()) % p != target) return false;
  }
  return true;
}

std::vector<mpz_class> partition_numbers(long N) {
  std::vector<mpz_class> p(std::max<long>(N, 0) + 1, mpz_class(0));
  p[0] = 1;
  for (long n = 1; n <= N; ++n) {
    mpz_class s = 0;
    for (long j = 1;; ++j) {
      const long g1 = j * (3 * j - 1) / 2;
      if (g1 > n) break;
      const long g2 = j * (3 * j + 1) / 2;
      if (j % 2) {
        s += p[n - g1];
        if (g2 <= n) s += p[n - g2];
      } else {
        s -= p[n - g1];
        if (g2 <= n) s -= p[n - g2];
      }
    }
    p[n] = s;
  }
  return p;
}

}  // namespace pzeros

#pragma once

// Phase functions L_{h,k}(z), their Fourier data b_k / c_k, the algebraic
// prefactors omega / Omega, and phase classification by the largest Re L.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "pzeros/cyclotomic.hpp"
#include "pzeros/partition.hpp"
#include "pzeros/specfun.hpp"

namespace pzeros {

// Index (h, k) of a phase function; k = 1 always carries h = 1.
struct CandidateIndex {
  long h = 1;
  long k = 1;
  friend bool operator==(const CandidateIndex&, const CandidateIndex&) = default;
  // Tie-break order: smaller k first, then smaller h.
  friend bool operator<(const CandidateIndex& a, const CandidateIndex& b) {
    return a.k != b.k ? a.k < b.k : a.h < b.h;
  }
};

std::string to_string(const CandidateIndex& c);

// L_{h,k}(z)^2 = scale * sum over terms of Li2(e_den(num) * z^power).
struct PhaseFunction {
  CandidateIndex index;
  mpq_class scale;
  long power = 1;
  struct Rotation {
    long num = 0;
    long den = 1;
    friend bool operator==(const Rotation&, const Rotation&) = default;
  };
  Rotation rotation;
  std::optional<Rotation> secondary;  // quadratic-units families only
  // Family modulus p (1 for all parts); Re L * sqrt(p) is a root dilogarithm
  // in the single-term families.
  long p = 1;
};

// D_{t,k}(0) exactly, 1 <= t <= k. UnsupportedFamily for quadratic units and
// explicit part lists.
Cyclotomic dirichlet_at_zero(const ExponentSequence& seq, long t, long k);
// Res(D_{t,k}, s = 1) exactly.
Cyclotomic residue_at_one(const ExponentSequence& seq, long t, long k);

struct FourierData {
  long k = 1;
  // b[j - 1] = b_k(j), j = 1..k; empty when D_{t,k}(0) is unsupported.
  std::vector<Cyclotomic> b;
  std::vector<Cyclotomic> c;
  bool has_b() const { return !b.empty(); }
  // b_k(j) as a Gaussian rational; throws if it is not one.
  std::pair<mpq_class, mpq_class> b_value(long j) const;
  mpq_class c_value(long j) const;
};

// Memoized; the returned reference stays valid for the process lifetime.
const FourierData& fourier_data(const ExponentSequence& seq, long k);

PhaseFunction phase_function(const ExponentSequence& seq, long h, long k);

BigComplex L_squared(const PhaseFunction& pf, const BigComplex& z, const PrecisionPolicy& policy = {});
// Principal square root of L^2.
BigComplex L_value(const PhaseFunction& pf, const BigComplex& z, const PrecisionPolicy& policy = {});
BigFloat re_L(const PhaseFunction& pf, const BigComplex& z, const PrecisionPolicy& policy = {});
// d/dz L = (L^2)' / (2 L), using d/dw Li2(w) = -ln(1 - w) / w.
BigComplex L_derivative(const PhaseFunction& pf, const BigComplex& z, const PrecisionPolicy& policy = {});
// L^2 through the defining sum over c_k(j) (slow; for cross-checks).
BigComplex L_squared_by_definition(const ExponentSequence& seq, long h, long k, const BigComplex& z,
                                   const PrecisionPolicy& policy = {});

// Finite list of indices whose Re L decides every phase.
std::vector<CandidateIndex> candidates(const ExponentSequence& seq);

// For Residue(a, p) with p >= 3: wedge h in Z_p of a candidate index, and the
// index of wedge h. Wedge h is where Re L = f_1(e_p(h a) z) / sqrt p is largest.
long wedge_index(const ExponentSequence& seq, const CandidateIndex& c);
CandidateIndex wedge_candidate(const ExponentSequence& seq, long h);

struct PhaseVerdict {
  CandidateIndex winner;
  CandidateIndex runner_up;
  double margin = 0.0;  // best minus second best Re L
  bool tie = false;
  double best_value = 0.0;
};

inline constexpr double kDefaultBoundaryTol = 1e-9;

PhaseVerdict classify(const ExponentSequence& seq, const BigComplex& z, double boundary_tol = kDefaultBoundaryTol,
                      const PrecisionPolicy& policy = {});

BigComplex omega(const ExponentSequence& seq, long h, long k, long n, const BigComplex& z,
                 const PrecisionPolicy& policy = {});
BigComplex Omega(const ExponentSequence& seq, long k, long n, const BigComplex& z, const PrecisionPolicy& policy = {});

struct AsymptoticValue {
  BigComplex value;
  bool branch_cut = false;  // doubled-real-part form used
};

// Leading-order estimate of F_n(z) in the phase of `winner`. The prefactor
// sums omega_{h',k,n} over the h' whose L_{h',k} coincides with L_{h,k}
// (all coprime h' for families where L does not depend on h).
AsymptoticValue asymptotic_estimate(const ExponentSequence& seq, const CandidateIndex& winner, long n,
                                    const BigComplex& z, const PrecisionPolicy& policy = {});

}  // namespace pzeros

#pragma once

// Configurable-precision special functions on the closed unit disk: the
// dilogarithm, the Clausen integral, Catalan's constant and the root
// dilogarithm f_k(z) = Re sqrt(Li2(z^k)) / k.

#include "pzeros/bigfloat.hpp"

namespace pzeros {

// Working precision and the absolute accuracy a caller asks for.
// Invariants: bits >= 53, tol > 0, tol >= 2^(8 - bits).
struct PrecisionPolicy {
  Bits bits = kDefaultBits;
  BigFloat tol = BigFloat::parse("1e-25", kDefaultBits);

  PrecisionPolicy() = default;
  PrecisionPolicy(Bits bits_, BigFloat tol_);
  PrecisionPolicy(Bits bits_, double tol_);

  // Tightest tolerance allowed at this precision: tol = 2^(8 - bits).
  static PrecisionPolicy for_bits(Bits bits);

  // Throws PrecisionError when tol is below what `bits` can deliver and
  // ValidationError for nonsensical settings.
  void validate() const;

  // Guarded precision used internally by the kernels.
  Bits working_bits() const { return bits + 32; }
};

// Li2(z) on |z| <= 1 + tol, principal branch.
// Throws DomainError outside that disk.
BigComplex dilog(const BigComplex& z, const PrecisionPolicy& policy = {});

// Cl2(t) = int_0^t ln(2 sin(s/2)) ds = -Im Li2(e^{it}). Odd, 2 pi periodic.
BigFloat clausen2(const BigFloat& t, const PrecisionPolicy& policy = {});
BigFloat clausen2(double t, const PrecisionPolicy& policy = {});

// Li2(e^{it}) = r(t) - i Cl2(t) with r(t) = pi^2/6 - t(2 pi - t)/4, 0 <= t <= 2 pi.
BigComplex dilog_on_circle(const BigFloat& t, const PrecisionPolicy& policy = {});

// Nonnegative real part of the principal square root: sqrt((Re z + |z|) / 2).
BigFloat re_sqrt(const BigComplex& z);

// f_k(z) = re_sqrt(Li2(z^k)) / k for k >= 1 and |z| <= 1 (+ tol).
// z^k is formed by repeated multiplication, never through a logarithm.
BigFloat root_dilog(int k, const BigComplex& z, const PrecisionPolicy& policy = {});

// Catalan's constant G = sum_{n>=0} (-1)^n / (2n+1)^2.
BigFloat catalan(const PrecisionPolicy& policy = {});

// pi^2 / 6 at the given precision.
BigFloat zeta2(Bits bits);

// Independent double-precision route to Cl2: minus the truncated sine series
// sum_{n<=terms} sin(n t)/n^2, with a rigorous bound on the neglected tail
// (summation by parts: |tail| <= 1 / (terms^2 |sin(t/2)|)).
struct SeriesEstimate {
  double value;
  double tail_bound;
};
SeriesEstimate clausen2_sine_series(double t, long terms);

}  // namespace pzeros

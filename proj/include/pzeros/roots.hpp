#pragma once

// All zeros of an exact-coefficient polynomial by Ehrlich-Aberth iteration:
// a double-precision stage from Newton-polygon starting points, then a
// multiprecision polish whose working precision doubles on stagnation.

#include <cstddef>
#include <vector>

#include "pzeros/partition.hpp"

namespace pzeros {

struct RootOptions {
  int max_escalations = 3;
  int max_sweeps = 80;          // multiprecision sweeps per precision level
  int max_double_sweeps = 200;
  int stagnation_sweeps = 3;
  std::size_t memory_budget_bytes = std::size_t{1} << 30;
};

struct RootSet {
  long n = 0;
  long degree = 0;
  long zero_multiplicity_at_origin = 0;
  // Nonzero roots, sorted by argument in [0, 2 pi) and then by modulus.
  std::vector<BigComplex> roots;
  // |F(r)| / |F'(r)| per root at the last sweep that touched it; the Newton
  // step, an estimate of the distance to the exact root.
  std::vector<double> residuals;
  double residual_bound = 0.0;
  Bits precision_bits = 0;
  long iterations = 0;  // double plus multiprecision sweeps
  int escalations = 0;
};

// The z^m factor at the origin is removed exactly; the remaining roots meet
// |F/F'| < 2^(-precision_bits/2) * max(1, |r|). Precision starts at the bit
// length of the largest coefficient plus 64 (at least policy.bits).
// ConvergenceError after max_escalations doublings; ResourceError when the
// working arrays would exceed the memory budget; DomainError for degree < 1.
RootSet find_roots(const PartitionPolynomial& F, const PrecisionPolicy& policy = {}, const RootOptions& opts = {});

// |F(r)| / |F'(r)| for each r, evaluated at max(policy.bits, coefficient bits + 64).
std::vector<double> residuals(const PartitionPolynomial& F, const std::vector<BigComplex>& roots,
                              const PrecisionPolicy& policy = {});

// Starting points for the nonzero roots: radii from the upper convex hull of
// (k, log|a_k|), angles spread around each circle with a fixed offset.
std::vector<BigComplex> initial_guesses(const PartitionPolynomial& F);

// max_k |c_k - a_k / a_d| / max_k |a_k / a_d| where c are the coefficients of
// z^m prod (z - r_i). Expanded with enough guard bits that rounding in the
// product does not matter.
double reconstruction_error(const PartitionPolynomial& F, const RootSet& roots);

}  // namespace pzeros

#pragma once

// Partition polynomials F_n(z) = sum_k c(n, k) z^k, where c(n, k) counts the
// partitions of n into exactly k parts drawn from the allowed set
// S = {m : a_m = 1}. Coefficients are exact GMP integers.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "pzeros/bigfloat.hpp"
#include "pzeros/specfun.hpp"

namespace pzeros {

enum class FamilyKind { AllParts, Residue, QuadraticUnits, Explicit };

class ExponentSequence {
 public:
  static ExponentSequence all_parts();
  // Parts m = a (mod p); 1 <= a <= p, gcd(a, p) = 1, p >= 2.
  static ExponentSequence residue(long a, long p);
  static ExponentSequence odd_parts() { return residue(1, 2); }
  // Parts m = 1 or m = -1 (mod p), p >= 3.
  static ExponentSequence quadratic_units(long p);
  // Finite list of allowed parts; everything else has a_m = 0.
  static ExponentSequence explicit_parts(std::vector<long> parts);

  FamilyKind kind() const { return kind_; }
  long a() const { return a_; }
  long p() const { return p_; }
  const std::vector<long>& parts() const { return parts_; }

  // a_m in {0, 1}; m >= 1.
  int exponent(long m) const;
  // Whether part 1 is allowed (a_1 = 1).
  bool has_unit_part() const { return exponent(1) == 1; }
  // Allowed parts up to and including `limit`, increasing.
  std::vector<long> parts_up_to(long limit) const;

  // Stable short identifier, e.g. "all-parts", "residue(1,3)", "explicit(1,2,5)".
  std::string name() const;

  friend bool operator==(const ExponentSequence&, const ExponentSequence&) = default;

 private:
  ExponentSequence() = default;
  FamilyKind kind_ = FamilyKind::AllParts;
  long a_ = 1;
  long p_ = 1;
  std::vector<long> parts_;
};

struct PartitionPolynomial {
  long n = 0;
  // coeffs[k] for k = 0..n; coeffs[0] = 0 for n >= 1.
  std::vector<mpz_class> coeffs;

  long degree() const;
  // Multiplicity of the zero at the origin (smallest k with coeffs[k] != 0).
  long origin_order() const;
  const mpz_class& coefficient(long k) const;
  mpz_class value_at_one() const;
  // Bit length of the largest coefficient.
  std::size_t max_coefficient_bits() const;
};

struct GenerateOptions {
  // Upper limit on the estimated size of the coefficient table.
  std::size_t memory_budget_bytes = std::size_t{4} << 30;
  // Force the generic part-by-part knapsack even for arithmetic progressions.
  bool force_knapsack = false;
};

// F_1 .. F_N. Throws ResourceError when the table would exceed the budget.
std::vector<PartitionPolynomial> generate(const ExponentSequence& seq, long N,
                                          const GenerateOptions& opts = {});
// F_n alone; the table is still built for all weights below n but only the
// last row is kept.
PartitionPolynomial generate_one(const ExponentSequence& seq, long n,
                                 const GenerateOptions& opts = {});

// Estimated bytes for the weight-by-part-count table up to N.
std::size_t estimate_table_bytes(const ExponentSequence& seq, long N);

// h_0..h_K of H(z) = prod_{m>=1} (1 - z^m)^{-a_{m+1}}.
std::vector<mpz_class> tail_series(const ExponentSequence& seq, long K,
                                   const GenerateOptions& opts = {});

// Horner evaluation of F at z with at least max_coefficient_bits + 64 bits.
BigComplex eval(const PartitionPolynomial& F, const BigComplex& z,
                const PrecisionPolicy& policy = {});

// For Residue(a, p): true iff every k with coeffs[k] != 0 has k a = n (mod p),
// which is equivalent to F_n(e_p(1) z) = e_p(n) F_n(z) when a = 1.
bool rotation_check(const ExponentSequence& seq, const PartitionPolynomial& F);

// Unrestricted partition numbers p(0..N) by Euler's pentagonal recurrence.
std::vector<mpz_class> partition_numbers(long N);

}  // namespace pzeros

#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N), zeta_N = e^{2 pi i / N}.
// Elements are stored as rational coefficient vectors in the power basis
// 1, zeta, ..., zeta^{N-1} modulo x^N - 1; that representation is not unique,
// so comparisons reduce modulo the cyclotomic polynomial Phi_N first.

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "pzeros/bigfloat.hpp"

namespace pzeros {

class Cyclotomic {
 public:
  explicit Cyclotomic(long order);
  Cyclotomic(long order, const mpq_class& value);

  // zeta_N^j, any integer j.
  static Cyclotomic root(long order, long j);

  long order() const { return n_; }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const mpq_class& s);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const mpq_class& s) { return a *= s; }

  // Complex conjugate (zeta -> zeta^{-1}).
  Cyclotomic conj() const;

  // Canonical coefficients: remainder modulo Phi_N, degree < phi(N).
  std::vector<mpq_class> canonical() const;
  bool is_zero() const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  // (re, im) when both are rational, which needs 4 | N to express i.
  std::optional<std::pair<mpq_class, mpq_class>> as_gaussian_rational() const;

  BigComplex to_complex(Bits bits) const;

 private:
  long n_;
  std::vector<mpq_class> c_;
};

// 1 / (1 - zeta_N^j) for zeta_N^j != 1.
Cyclotomic inverse_one_minus_root(long order, long j);

// Integer coefficients of Phi_N, lowest degree first.
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

}  // namespace pzeros

// Copyright 2026 The chowreg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHOWREG_CYCLOTOMIC_HPP
#define CHOWREG_CYCLOTOMIC_HPP

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// Elements are stored in the power basis 1, zeta, ..., zeta^(phi(N)-1), i.e.
// as the canonical remainder modulo the N-th cyclotomic polynomial. The
// complex embedding is fixed once and for all as zeta_N -> exp(2 pi i / N).

#include <gmpxx.h>

#include <string>
#include <vector>

#include "chowreg/real.hpp"

namespace chowreg {

using Rational = mpq_class;

int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

/// lcm of two cyclotomic orders; elements of both fields embed in Q(zeta_lcm).
int common_order(int a, int b);

class CyclotomicNumber {
 public:
  /// Zero of Q = Q(zeta_1).
  CyclotomicNumber();
  /// Reduces an arbitrary polynomial in zeta_N (constant term first).
  CyclotomicNumber(int order, std::vector<Rational> poly_in_zeta);

  static CyclotomicNumber rational(int order, const Rational& q);
  static CyclotomicNumber integer(int order, long v) { return rational(order, Rational(v)); }
  /// zeta_N^power (any integer power).
  static CyclotomicNumber zeta(int order, long power = 1);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Valid only when is_rational().
  Rational rational_part() const { return coeffs_[0]; }

  CyclotomicNumber inverse() const;
  /// Complex conjugate under the fixed embedding (zeta -> zeta^-1).
  CyclotomicNumber conj() const;
  CyclotomicNumber pow(long e) const;
  /// Image in Q(zeta_M); requires order() | new_order.
  CyclotomicNumber promote(int new_order) const;

  /// Human-readable form, parseable by the cycle-file expression grammar.
  std::string to_string() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& b);
  CyclotomicNumber& operator-=(const CyclotomicNumber& b);
  CyclotomicNumber& operator*=(const CyclotomicNumber& b);
  CyclotomicNumber& operator/=(const CyclotomicNumber& b);

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return !(a == b);
  }
  /// Deterministic total order (order, then coefficients); not a field order.
  friend bool operator<(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  int order_ = 1;
  std::vector<Rational> coeffs_;
};

CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b);
CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b);
CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);

enum class FieldOp { kAdd, kSub, kMul, kDiv };

/// a op b for elements of the same order. Throws on order mismatch and on
/// division by zero.
CyclotomicNumber cyclo_arith(const CyclotomicNumber& a, const CyclotomicNumber& b,
                             FieldOp op);

/// Value under zeta_N -> exp(2 pi i / N), computed at `precision_bits`.
/// The radius is zero when the value is exactly representable.
ComplexApprox embed(const CyclotomicNumber& a, long precision_bits);

/// Same, at the current working precision.
ComplexApprox embed(const CyclotomicNumber& a);

}  // namespace chowreg

#endif  // CHOWREG_CYCLOTOMIC_HPP

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

#ifndef CHOWREG_DIVISOR_HPP
#define CHOWREG_DIVISOR_HPP

// Points of P^1, evaluation, certified polynomial roots and divisors.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chowreg/cyclotomic.hpp"
#include "chowreg/polynomial.hpp"
#include "chowreg/real.hpp"

namespace chowreg {

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

/// A point of P^1: exact over Q(zeta_N), the point at infinity, or a
/// numeric ball (a closed point not rational over the field).
class P1Point {
 public:
  P1Point() : v_(Infinity{}) {}
  P1Point(CyclotomicNumber c) : v_(std::move(c)) {}  // NOLINT
  P1Point(Infinity inf) : v_(inf) {}                  // NOLINT
  P1Point(ComplexApprox z) : v_(std::move(z)) {}      // NOLINT

  static P1Point infinity() { return P1Point(Infinity{}); }

  bool is_exact() const { return std::holds_alternative<CyclotomicNumber>(v_); }
  bool is_infinity() const { return std::holds_alternative<Infinity>(v_); }
  bool is_numeric() const { return std::holds_alternative<ComplexApprox>(v_); }

  const CyclotomicNumber& exact() const { return std::get<CyclotomicNumber>(v_); }
  const ComplexApprox& approx() const { return std::get<ComplexApprox>(v_); }

  /// Ball for a finite point (exact points are embedded). Throws on infinity.
  ComplexApprox numeric(long precision_bits) const;

  std::string to_string(int digits = 20) const;

 private:
  std::variant<CyclotomicNumber, Infinity, ComplexApprox> v_;
};

enum class PointMatch { kSame, kDistinct, kUndecided };

/// Exact points compare exactly. Numeric comparisons use the error radii:
/// disjoint balls are distinct, overlapping balls whose radii are below
/// 2^(-bits/3) are the same point, anything else is undecided.
PointMatch compare_points(const P1Point& a, const P1Point& b, long precision_bits);

/// f(at). Poles give infinity. A numeric point is treated as a pole when the
/// denominator ball contains zero and the numerator ball does not; if both
/// contain zero a precision error is thrown.
P1Point eval(const RationalFunction& f, const P1Point& at, long precision_bits);
P1Point eval(const RationalFunction& f, const P1Point& at);

struct NumericRoot {
  ComplexApprox location;
  int multiplicity;
};

/// All complex roots of p != 0 with certified, pairwise disjoint inclusion
/// discs. Multiplicities come from the exact squarefree decomposition.
std::vector<NumericRoot> roots_numeric(const Poly& p, long precision_bits);

struct DivisorPoint {
  P1Point location;
  int multiplicity;
};

/// Zeros (positive) and poles (negative) of f != 0, infinity included.
/// Locations are exact when the root lies in the coefficient field and can
/// be recognised, numeric clusters otherwise.
std::vector<DivisorPoint> divisor(const RationalFunction& f, long precision_bits);
std::vector<DivisorPoint> divisor(const RationalFunction& f);

/// Floating-point evaluation of a rational function and its derivative at
/// the working precision in effect when it was constructed.
class NumericRational {
 public:
  NumericRational() = default;
  explicit NumericRational(const RationalFunction& f);

  Complex value(const Complex& t) const;
  /// f(t) and f'(t) in one pass.
  void value_and_derivative(const Complex& t, Complex& f, Complex& df) const;
  /// f'(t) / f(t).
  Complex dlog(const Complex& t) const;

  const std::vector<Complex>& num() const { return num_; }
  const std::vector<Complex>& den() const { return den_; }

 private:
  std::vector<Complex> num_, den_;
};

/// Simultaneous (Aberth) iteration for the roots of a squarefree polynomial
/// with complex coefficients, constant term first, to about `bits` bits.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, long bits);

/// Horner evaluation (coefficients constant term first); also returns the
/// derivative when dp != nullptr.
Complex horner(const std::vector<Complex>& c, const Complex& z, Complex* dp = nullptr);

/// Best rational approximation of x with denominator below 2^(bits/4),
/// accepted only if it matches x to about bits/2 bits.
bool recognize_rational(const Real& x, long precision_bits, Rational& out);

}  // namespace chowreg

#endif  // CHOWREG_DIVISOR_HPP

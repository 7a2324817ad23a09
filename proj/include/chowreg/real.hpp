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

#ifndef CHOWREG_REAL_HPP
#define CHOWREG_REAL_HPP

// Multiprecision real and complex scalars.
//
// Real is a thin RAII holder around an mpfr_t. New values are created at the
// calling thread's working precision, which is set with a WorkingPrecision
// guard; every operation rounds to nearest at that precision.

#include <gmpxx.h>
#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace chowreg {

/// Sets the working precision (in bits) of the calling thread for the
/// lifetime of the guard.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(long bits);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

  static long bits();

 private:
  long saved_;
};

class Real {
 public:
  Real();
  Real(double x);  // NOLINT(google-explicit-constructor)
  Real(long x);    // NOLINT(google-explicit-constructor)
  Real(int x) : Real(static_cast<long>(x)) {}  // NOLINT
  explicit Real(const mpz_class& x);
  explicit Real(const mpq_class& x);
  /// Parses a decimal string at working precision.
  static Real from_string(const std::string& s);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  long precision() const { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Upper bound on |x| as a double (rounded toward +inf).
  double abs_upper() const;
  /// Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 20) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; undefined for zero.
  long exponent() const { return mpfr_get_exp(value_); }

  Real& operator+=(const Real& b);
  Real& operator-=(const Real& b);
  Real& operator*=(const Real& b);
  Real& operator/=(const Real& b);
  Real operator-() const;

  static Real pi();
  static Real ulp_of_one();  // 2^(1 - working precision)

 private:
  mpfr_t value_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real round(const Real& x);
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

std::ostream& operator<<(std::ostream& os, const Real& x);

/// Complex number with Real parts.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)) {}  // NOLINT
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r) : re(r) {}  // NOLINT
  Complex(long r) : re(r) {}    // NOLINT
  Complex(int r) : re(r) {}     // NOLINT

  static Complex polar(const Real& r, const Real& theta);
  static Complex i() { return Complex(Real(0L), Real(1L)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Complex& operator+=(const Complex& b);
  Complex& operator-=(const Complex& b);
  Complex& operator*=(const Complex& b);
  Complex& operator/=(const Complex& b);
  Complex operator-() const { return Complex(-re, -im); }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);   // principal value in (-pi, pi]
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long n);

std::ostream& operator<<(std::ostream& os, const Complex& z);

/// A complex ball: a midpoint and a radius bounding the distance from the
/// midpoint to the true value.
struct ComplexApprox {
  Complex mid;
  double rad = 0.0;

  ComplexApprox() = default;
  ComplexApprox(Complex m, double r = 0.0) : mid(std::move(m)), rad(r) {}  // NOLINT

  bool contains_zero() const;
  bool contains(const Complex& z) const;
  bool overlaps(const ComplexApprox& other) const;
  /// Upper bound on |value|.
  double abs_upper() const;
  /// Lower bound on |value| (0 if the ball contains zero).
  double abs_lower() const;
};

ComplexApprox operator+(const ComplexApprox& a, const ComplexApprox& b);
ComplexApprox operator-(const ComplexApprox& a, const ComplexApprox& b);
ComplexApprox operator-(const ComplexApprox& a);
ComplexApprox operator*(const ComplexApprox& a, const ComplexApprox& b);
ComplexApprox operator/(const ComplexApprox& a, const ComplexApprox& b);

/// Rounding error bound for a value of magnitude |z| produced by one
/// correctly rounded operation at working precision.
double rounding_bound(const Complex& z);

/// Adds in upward-rounded double arithmetic.
double add_up(double a, double b);
double mul_up(double a, double b);

}  // namespace chowreg

#endif  // CHOWREG_REAL_HPP

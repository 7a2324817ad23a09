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

#include "chowreg/real.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <utility>

namespace chowreg {

namespace {

thread_local long g_working_bits = 256;

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

}  // namespace

// WorkingPrecision ------------------------------------------------------------

WorkingPrecision::WorkingPrecision(long bits) : saved_(g_working_bits) {
  if (bits < MPFR_PREC_MIN) bits = MPFR_PREC_MIN;
  g_working_bits = bits;
}

WorkingPrecision::~WorkingPrecision() { g_working_bits = saved_; }

long WorkingPrecision::bits() { return g_working_bits; }

// Real ------------------------------------------------------------------------

Real::Real() {
  mpfr_init2(value_, g_working_bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(double x) {
  mpfr_init2(value_, g_working_bits);
  mpfr_set_d(value_, x, kRnd);
}

Real::Real(long x) {
  mpfr_init2(value_, g_working_bits);
  mpfr_set_si(value_, x, kRnd);
}

Real::Real(const mpz_class& x) {
  mpfr_init2(value_, g_working_bits);
  mpfr_set_z(value_, x.get_mpz_t(), kRnd);
}

Real::Real(const mpq_class& x) {
  mpfr_init2(value_, g_working_bits);
  mpfr_set_q(value_, x.get_mpq_t(), kRnd);
}

Real Real::from_string(const std::string& s) {
  Real r;
  mpfr_set_str(r.value_, s.c_str(), 10, kRnd);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRnd);
}

Real::Real(Real&& other) noexcept {
  value_[0] = other.value_[0];
  other.value_->_mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (value_->_mpfr_d == nullptr) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
  } else {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
  }
  mpfr_set(value_, other.value_, kRnd);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() {
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
}

double Real::abs_upper() const {
  Real a;
  mpfr_set_prec(a.value_, mpfr_get_prec(value_));
  mpfr_abs(a.value_, value_, kRnd);
  return mpfr_get_d(a.value_, MPFR_RNDU);
}

std::string Real::to_string(int digits) const {
  if (!is_finite()) {
    if (mpfr_nan_p(value_)) return "nan";
    return sign() > 0 ? "inf" : "-inf";
  }
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits > 1 ? digits - 1 : 0) + "Re";
  mpfr_asprintf(&buf, fmt.c_str(), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real& Real::operator+=(const Real& b) {
  mpfr_add(value_, value_, b.value_, kRnd);
  return *this;
}
Real& Real::operator-=(const Real& b) {
  mpfr_sub(value_, value_, b.value_, kRnd);
  return *this;
}
Real& Real::operator*=(const Real& b) {
  mpfr_mul(value_, value_, b.value_, kRnd);
  return *this;
}
Real& Real::operator/=(const Real& b) {
  mpfr_div(value_, value_, b.value_, kRnd);
  return *this;
}

Real Real::operator-() const {
  Real r;
  mpfr_neg(r.value_, value_, kRnd);
  return r;
}

Real Real::pi() {
  Real r;
  mpfr_const_pi(r.value_, kRnd);
  return r;
}

Real Real::ulp_of_one() {
  Real r(1L);
  mpfr_mul_2si(r.value_, r.value_, 1 - g_working_bits, kRnd);
  return r;
}

#define CHOWREG_BINOP(op, fn)                          \
  Real operator op(const Real& a, const Real& b) {     \
    Real r;                                            \
    fn(r.get(), a.get(), b.get(), kRnd);               \
    return r;                                          \
  }
CHOWREG_BINOP(+, mpfr_add)
CHOWREG_BINOP(-, mpfr_sub)
CHOWREG_BINOP(*, mpfr_mul)
CHOWREG_BINOP(/, mpfr_div)
#undef CHOWREG_BINOP

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()); }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()); }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()); }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()); }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()); }
bool operator!=(const Real& a, const Real& b) { return !mpfr_equal_p(a.get(), b.get()); }

#define CHOWREG_UNARY(name, fn)        \
  Real name(const Real& x) {           \
    Real r;                            \
    fn(r.get(), x.get(), kRnd);        \
    return r;                          \
  }
CHOWREG_UNARY(abs, mpfr_abs)
CHOWREG_UNARY(sqrt, mpfr_sqrt)
CHOWREG_UNARY(exp, mpfr_exp)
CHOWREG_UNARY(log, mpfr_log)
CHOWREG_UNARY(log1p, mpfr_log1p)
CHOWREG_UNARY(sin, mpfr_sin)
CHOWREG_UNARY(cos, mpfr_cos)
CHOWREG_UNARY(tan, mpfr_tan)
#undef CHOWREG_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r;
  mpfr_hypot(r.get(), x.get(), y.get(), kRnd);
  return r;
}

Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.get(), x.get(), n, kRnd);
  return r;
}

Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.get(), x.get());
  return r;
}

Real round(const Real& x) {
  Real r;
  mpfr_round(r.get(), x.get());
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r;
  mpfr_mul_2si(r.get(), x.get(), e, kRnd);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << x.to_string(20);
}

// Complex ---------------------------------------------------------------------

Complex Complex::polar(const Real& r, const Real& theta) {
  Real s;
  Real c;
  mpfr_sin_cos(s.get(), c.get(), theta.get(), kRnd);
  return Complex(r * c, r * s);
}

Complex& Complex::operator+=(const Complex& b) {
  re += b.re;
  im += b.im;
  return *this;
}
Complex& Complex::operator-=(const Complex& b) {
  re -= b.re;
  im -= b.im;
  return *this;
}
Complex& Complex::operator*=(const Complex& b) {
  *this = *this * b;
  return *this;
}
Complex& Complex::operator/=(const Complex& b) {
  *this = *this / b;
  return *this;
}

Complex operator+(const Complex& a, const Complex& b) {
  return Complex(a.re + b.re, a.im + b.im);
}
Complex operator-(const Complex& a, const Complex& b) {
  return Complex(a.re - b.re, a.im - b.im);
}
Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
Complex operator/(const Complex& a, const Complex& b) {
  // Smith's algorithm avoids overflow for badly scaled operands.
  if (abs(b.re) >= abs(b.im)) {
    Real ratio = b.im / b.re;
    Real den = b.re + b.im * ratio;
    return Complex((a.re + a.im * ratio) / den, (a.im - a.re * ratio) / den);
  }
  Real ratio = b.re / b.im;
  Real den = b.re * ratio + b.im;
  return Complex((a.re * ratio + a.im) / den, (a.im * ratio - a.re) / den);
}
Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
Complex operator*(const Real& a, const Complex& b) { return Complex(a * b.re, a * b.im); }
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re / b, a.im / b); }

Real abs(const Complex& z) { return hypot(z.re, z.im); }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real arg(const Complex& z) { return atan2(z.im, z.re); }
Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Complex exp(const Complex& z) { return Complex::polar(exp(z.re), z.im); }

Complex log(const Complex& z) { return Complex(log(abs(z)), arg(z)); }

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return Complex();
  Real r = abs(z);
  Real a = sqrt((r + abs(z.re)) / Real(2L));
  if (z.re.sign() >= 0) return Complex(a, z.im / (a * Real(2L)));
  Real b = z.im.sign() < 0 ? -a : a;
  return Complex(abs(z.im) / (a * Real(2L)), b);
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(1L) / pow(z, -n);
  Complex result(1L);
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << "(" << z.re << ", " << z.im << ")";
}

// ComplexApprox ---------------------------------------------------------------

double add_up(double a, double b) {
  return std::nextafter(a + b, std::numeric_limits<double>::infinity());
}

double mul_up(double a, double b) {
  return std::nextafter(a * b, std::numeric_limits<double>::infinity());
}

double rounding_bound(const Complex& z) {
  double m = add_up(z.re.abs_upper(), z.im.abs_upper());
  return mul_up(m, std::ldexp(1.0, static_cast<int>(1 - WorkingPrecision::bits())));
}

bool ComplexApprox::contains_zero() const { return abs_lower() == 0.0; }

bool ComplexApprox::contains(const Complex& z) const {
  Real d = abs(mid - z);
  return d <= Real(rad);
}

bool ComplexApprox::overlaps(const ComplexApprox& other) const {
  Real d = abs(mid - other.mid);
  return d <= Real(add_up(rad, other.rad));
}

double ComplexApprox::abs_upper() const { return add_up(abs(mid).abs_upper(), rad); }

double ComplexApprox::abs_lower() const {
  double m = mpfr_get_d(abs(mid).get(), MPFR_RNDD);
  double lo = m - rad;
  return lo > 0.0 ? std::nextafter(lo, 0.0) : 0.0;
}

ComplexApprox operator+(const ComplexApprox& a, const ComplexApprox& b) {
  Complex m = a.mid + b.mid;
  double r = add_up(add_up(a.rad, b.rad), rounding_bound(m));
  return ComplexApprox(std::move(m), r);
}

ComplexApprox operator-(const ComplexApprox& a, const ComplexApprox& b) {
  Complex m = a.mid - b.mid;
  double r = add_up(add_up(a.rad, b.rad), rounding_bound(m));
  return ComplexApprox(std::move(m), r);
}

ComplexApprox operator-(const ComplexApprox& a) { return ComplexApprox(-a.mid, a.rad); }

ComplexApprox operator*(const ComplexApprox& a, const ComplexApprox& b) {
  Complex m = a.mid * b.mid;
  double r = mul_up(abs(a.mid).abs_upper(), b.rad);
  r = add_up(r, mul_up(abs(b.mid).abs_upper(), a.rad));
  r = add_up(r, mul_up(a.rad, b.rad));
  r = add_up(r, mul_up(4.0, rounding_bound(m)));
  return ComplexApprox(std::move(m), r);
}

ComplexApprox operator/(const ComplexApprox& a, const ComplexApprox& b) {
  double lo = b.abs_lower();
  if (lo == 0.0) {
    return ComplexApprox(a.mid / b.mid, std::numeric_limits<double>::infinity());
  }
  Complex inv_mid = Complex(1L) / b.mid;
  // |1/x - 1/m| = |x - m| / (|x| |m|) <= rad / lo^2 on the ball.
  double inv_rad = b.rad / std::nextafter(lo * lo, 0.0);
  inv_rad = add_up(std::nextafter(inv_rad, std::numeric_limits<double>::infinity()),
                   mul_up(4.0, rounding_bound(inv_mid)));
  return a * ComplexApprox(std::move(inv_mid), inv_rad);
}

}  // namespace chowreg

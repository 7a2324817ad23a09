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

#include "chowreg/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "chowreg/error.hpp"

namespace chowreg {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder and quotient of a by monic-or-not b over Q.
void divmod(QPoly a, const QPoly& b, QPoly& quot, QPoly& rem) {
  trim(a);
  const std::size_t db = b.size() - 1;
  quot.assign(a.size() >= b.size() ? a.size() - db : 0, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = a.size(); k-- > db;) {
    if (a[k] == 0) continue;
    Rational c = a[k] / lead;
    quot[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  trim(a);
  rem = std::move(a);
  trim(quot);
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

QPoly phi_as_qpoly(int n) {
  const auto& phi = cyclotomic_polynomial(n);
  QPoly out;
  out.reserve(phi.size());
  for (const auto& c : phi) out.emplace_back(c);
  return out;
}

// Reduces p modulo the (monic) n-th cyclotomic polynomial, padding to phi(n).
std::vector<Rational> reduce(int n, QPoly p) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t d = phi.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    if (p[k] == 0) continue;
    Rational c = p[k];
    for (std::size_t j = 0; j < d; ++j) p[k - d + j] -= c * Rational(phi[j]);
    p[k] = 0;
  }
  p.resize(d, Rational(0));
  return p;
}

void require_same_order(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order() != b.order()) {
    fail(ErrorClass::kDomain, "cyclotomic order mismatch: " + std::to_string(a.order()) +
                                  " vs " + std::to_string(b.order()) +
                                  " (promote to a common order first)");
  }
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
  if (n < 1) fail(ErrorClass::kDomain, "cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<mpz_class>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  QPoly num(static_cast<std::size_t>(n) + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    QPoly q;
    QPoly r;
    divmod(num, phi_as_qpoly(d), q, r);
    num = std::move(q);
  }
  std::vector<mpz_class> out;
  out.reserve(num.size());
  for (const auto& c : num) out.push_back(c.get_num());
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(out)).first->second;
}

int common_order(int a, int b) { return std::lcm(a, b); }

// CyclotomicNumber -------------------------------------------------------------

CyclotomicNumber::CyclotomicNumber() : order_(1), coeffs_(1, Rational(0)) {}

CyclotomicNumber::CyclotomicNumber(int order, std::vector<Rational> poly_in_zeta)
    : order_(order) {
  for (auto& c : poly_in_zeta) c.canonicalize();
  coeffs_ = reduce(order, std::move(poly_in_zeta));
}

CyclotomicNumber CyclotomicNumber::rational(int order, const Rational& q) {
  return CyclotomicNumber(order, {q});
}

CyclotomicNumber CyclotomicNumber::zeta(int order, long power) {
  long k = power % order;
  if (k < 0) k += order;
  QPoly p(static_cast<std::size_t>(k) + 1, Rational(0));
  p[k] = 1;
  return CyclotomicNumber(order, std::move(p));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicNumber::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) fail(ErrorClass::kDomain, "division by zero in Q(zeta_" + std::to_string(order_) + ")");
  // Extended Euclid: track s with s * a == r (mod Phi).
  QPoly r0 = phi_as_qpoly(order_);
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0;
  QPoly s1{Rational(1)};
  while (r1.size() > 1) {
    QPoly q;
    QPoly r;
    divmod(r0, r1, q, r);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since Phi is irreducible.
  Rational c = r1[0];
  for (auto& v : s1) v /= c;
  return CyclotomicNumber(order_, std::move(s1));
}

CyclotomicNumber CyclotomicNumber::conj() const {
  QPoly p(static_cast<std::size_t>(order_), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    p[(order_ - static_cast<int>(k)) % order_] += coeffs_[k];
  }
  return CyclotomicNumber(order_, std::move(p));
}

CyclotomicNumber CyclotomicNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicNumber result = rational(order_, Rational(1));
  CyclotomicNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CyclotomicNumber CyclotomicNumber::promote(int new_order) const {
  if (new_order % order_ != 0) {
    fail(ErrorClass::kDomain, "cannot promote Q(zeta_" + std::to_string(order_) +
                                  ") into Q(zeta_" + std::to_string(new_order) + ")");
  }
  const std::size_t step = static_cast<std::size_t>(new_order / order_);
  QPoly p(coeffs_.size() * step + 1, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
  return CyclotomicNumber(new_order, std::move(p));
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "zeta";
    if (k > 1) os << "^" << k;
  }
  if (first) return "0";
  return os.str();
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& b) {
  require_same_order(*this, b);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& b) {
  require_same_order(*this, b);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= b.coeffs_[k];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& b) {
  require_same_order(*this, b);
  coeffs_ = reduce(order_, mul(coeffs_, b.coeffs_));
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& b) {
  require_same_order(*this, b);
  return *this *= b.inverse();
}

bool operator<(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ != b.order_) return a.order_ < b.order_;
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    if (a.coeffs_[k] != b.coeffs_[k]) return a.coeffs_[k] < b.coeffs_[k];
  }
  return false;
}

CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  CyclotomicNumber r = a;
  return r *= b;
}
CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  CyclotomicNumber r = a;
  return r /= b;
}

CyclotomicNumber cyclo_arith(const CyclotomicNumber& a, const CyclotomicNumber& b,
                             FieldOp op) {
  switch (op) {
    case FieldOp::kAdd: return a + b;
    case FieldOp::kSub: return a - b;
    case FieldOp::kMul: return a * b;
    case FieldOp::kDiv: return a / b;
  }
  fail(ErrorClass::kDomain, "unknown field operation");
}

ComplexApprox embed(const CyclotomicNumber& a, long precision_bits) {
  if (precision_bits < 53) fail(ErrorClass::kPrecision, "embedding precision must be >= 53 bits");
  const int n = a.order();
  // zeta is 1, -1 or i exactly for these orders.
  const bool exact_basis = (n == 1 || n == 2 || n == 4);
  bool exact = exact_basis;
  double coeff_sum = 1.0;
  Complex sum;
  {
    WorkingPrecision guard(precision_bits + 32);
    Real two_pi_over_n = Real::pi() * Real(2L) / Real(static_cast<long>(n));
    sum = Complex(Real(0L), Real(0L));
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
      const Rational& c = a.coeffs()[k];
      if (c == 0) continue;
      Real cr;
      mpfr_set_prec(cr.get(), precision_bits);
      if (mpfr_set_q(cr.get(), c.get_mpq_t(), MPFR_RNDN) != 0) exact = false;
      coeff_sum = add_up(coeff_sum, cr.abs_upper());
      Complex root;
      if (k == 0) {
        root = Complex(Real(1L), Real(0L));
      } else if (n == 4 && k == 1) {
        root = Complex(Real(0L), Real(1L));
      } else {
        root = Complex::polar(Real(1L), two_pi_over_n * Real(static_cast<long>(k)));
      }
      sum += root * cr;
    }
  }
  WorkingPrecision guard(precision_bits);
  Complex mid(Real(sum.re), Real(sum.im));
  // Copy-construction keeps the guard-bit precision; round explicitly.
  mpfr_prec_round(mid.re.get(), precision_bits, MPFR_RNDN);
  mpfr_prec_round(mid.im.get(), precision_bits, MPFR_RNDN);
  if (exact) {
    // Exact parts were accumulated without rounding if they fit.
    bool fits = (mpfr_cmp(mid.re.get(), sum.re.get()) == 0) &&
                (mpfr_cmp(mid.im.get(), sum.im.get()) == 0);
    if (fits) return ComplexApprox(std::move(mid), 0.0);
  }
  double rad = mul_up(coeff_sum, std::ldexp(8.0, static_cast<int>(-precision_bits)));
  return ComplexApprox(std::move(mid), rad);
}

ComplexApprox embed(const CyclotomicNumber& a) { return embed(a, WorkingPrecision::bits()); }

}  // namespace chowreg

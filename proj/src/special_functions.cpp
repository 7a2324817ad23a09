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

#include "chowreg/special_functions.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <vector>

#include <gmpxx.h>

#include "chowreg/error.hpp"

namespace chowreg {

namespace {

// Bernoulli numbers B_0..B_n (B_1 = -1/2), extended on demand.
const std::vector<mpq_class>& bernoulli_numbers(std::size_t n) {
  static std::mutex mu;
  static std::vector<mpq_class> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    const std::size_t m = cache.size();
    if (m == 0) {
      cache.emplace_back(1);
      continue;
    }
    // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(m+1, 0)
    for (std::size_t k = 0; k < m; ++k) {
      acc += mpq_class(binom) * cache[k];
      binom = binom * static_cast<unsigned long>(m + 1 - k) / static_cast<unsigned long>(k + 1);
    }
    mpq_class b = -acc / mpq_class(static_cast<unsigned long>(m + 1));
    b.canonicalize();
    cache.push_back(b);
  }
  return cache;
}

double ulp_scale() { return std::ldexp(1.0, static_cast<int>(10 - WorkingPrecision::bits())); }

Real pi_squared_over_6() {
  Real pi = Real::pi();
  return pi * pi / Real(6L);
}

// sum z^k / k^2 for |z| <= 1/2; returns the truncation bound through `err`.
Complex li2_series(const Complex& z, double& err) {
  const Real az = abs(z);
  const Real eps = Real::ulp_of_one();
  Complex sum;
  Complex zk = z;
  long k = 1;
  for (;; ++k) {
    Complex term = zk / Real(k * k);
    sum += term;
    if (abs(term) < eps * Real(1e-3)) break;
    zk *= z;
  }
  // Tail: |z|^(k+1) / ((k+1)^2 (1 - |z|))
  Real tail = pow(az, k + 1) / (Real((k + 1) * (k + 1)) * (Real(1L) - az));
  err = add_up(err, tail.abs_upper());
  return sum;
}

// Li2(z) = sum_n B_n u^(n+1) / (n+1)!,  u = -log(1 - z), valid for |u| < 2 pi.
Complex li2_bernoulli(const Complex& z, double& err) {
  const Complex u = -log(Complex(1L) - z);
  const Real au = abs(u);
  const Real two_pi = Real::pi() * Real(2L);
  const Real ratio = au / two_pi;
  const Real eps = Real::ulp_of_one();
  Complex sum = u - u * u / Real(4L);  // n = 0, 1
  Complex u2 = u * u;
  Complex upow = u;                       // u^(n+1) for n = 0
  Real fact(1L);                          // (n+1)! for n = 0
  for (std::size_t n = 2;; n += 2) {
    const auto& bern = bernoulli_numbers(n);
    upow *= u2;                           // u^(n+1)
    fact *= Real(static_cast<long>(n)) * Real(static_cast<long>(n + 1));
    Complex term = upow * (Real(bern[n]) / fact);
    sum += term;
    // |B_n| / (n+1)! <= 2 zeta(2) / ((2 pi)^n (n+1)), so the tail is geometric
    // with ratio (|u| / 2 pi)^2.
    Real bound = Real(3.3) * two_pi * pow(ratio, static_cast<long>(n + 3)) /
                 (Real(static_cast<long>(n + 3)) * (Real(1L) - ratio * ratio));
    if (bound < eps * Real(1e-3)) {
      err = add_up(err, bound.abs_upper());
      break;
    }
  }
  return sum;
}

Complex li2_unit_disk(const Complex& z, double& err) {
  if (z.is_zero()) return Complex();
  Real az = abs(z);
  if (az <= Real(0.5)) return li2_series(z, err);
  Complex w = Complex(1L) - z;
  if (w.is_zero()) return Complex(pi_squared_over_6());
  if (abs(w) <= Real(0.5)) {
    // Reflection: Li2(z) = pi^2/6 - log z log(1 - z) - Li2(1 - z).
    return Complex(pi_squared_over_6()) - log(z) * log(w) - li2_series(w, err);
  }
  return li2_bernoulli(z, err);
}

}  // namespace

ComplexApprox pi_const(long precision_bits) {
  WorkingPrecision guard(precision_bits);
  Real pi = Real::pi();
  double rad = std::ldexp(4.0, static_cast<int>(1 - precision_bits));  // 1 ulp of pi
  return ComplexApprox(Complex(pi, Real(0L)), rad);
}

Real distance_to_cut_angle(const Complex& z, const Real& phase) {
  const Real pi = Real::pi();
  Real d = arg(z) - (pi - phase);
  const Real two_pi = pi * Real(2L);
  // Wrap into (-pi, pi].
  while (d > pi) d -= two_pi;
  while (d <= -pi) d += two_pi;
  return abs(d);
}

Complex log_eps(const Complex& z, const Real& phase) {
  const Real pi = Real::pi();
  Real theta = arg(z);
  if (theta > pi - phase) theta -= pi * Real(2L);
  return Complex(log(abs(z)), theta);
}

ComplexApprox log_eps(const ComplexApprox& z, const BranchSpec& b) {
  if (z.contains_zero()) fail(ErrorClass::kPrecision, "log_eps: argument ball contains 0");
  const Real mod = abs(z.mid);
  if (z.rad > 0.0) {
    Real delta = distance_to_cut_angle(z.mid, b.phase);
    Real perp = delta < Real::pi() / Real(2L) ? mod * sin(delta) : mod;
    if (perp <= Real(z.rad)) {
      fail(ErrorClass::kPrecision,
           "log_eps: argument straddles the branch cut arg = pi - phase; "
           "retry with a different phase or higher precision");
    }
  }
  Complex v = log_eps(z.mid, b.phase);
  double lo = z.abs_lower();
  double rad = z.rad > 0.0 ? add_up(z.rad / std::nextafter(lo, 0.0), 0.0) : 0.0;
  rad = add_up(rad, mul_up(8.0, rounding_bound(v)));
  return ComplexApprox(std::move(v), rad);
}

ComplexApprox li2(const ComplexApprox& z) {
  const Complex& m = z.mid;
  double err = 0.0;
  Complex value;
  const Real one(1L);
  if (abs(m) > one) {
    // Inversion: Li2(z) = -Li2(1/z) - pi^2/6 - log(-z)^2 / 2.
    Complex neg = -m;
    Complex log_neg;
    if (m.im.is_zero() && m.re > one) {
      // On the cut: limit from below, where arg(-z) -> +pi.
      log_neg = Complex(log(abs(m)), Real::pi());
    } else {
      log_neg = log(neg);
    }
    value = -li2_unit_disk(Complex(1L) / m, err) - Complex(pi_squared_over_6()) -
            log_neg * log_neg / Real(2L);
  } else {
    value = li2_unit_disk(m, err);
  }
  err = add_up(err, mul_up(ulp_scale(), add_up(1.0, abs(value).abs_upper())));
  if (z.rad > 0.0) {
    // |Li2'(w)| = |log(1 - w) / w|; bound it over the ball.
    double dist1 = abs(m - Complex(1L)).abs_upper();
    double lo1 = std::max(dist1 - z.rad, 0.0);
    double lo0 = z.abs_lower();
    double deriv;
    if (lo1 <= 0.0 || lo0 <= 0.0) {
      // Modulus of continuity near the logarithmic point w = 1.
      double r = add_up(dist1, z.rad);
      deriv = 2.0 * (1.0 + std::abs(std::log(std::max(r, 1e-300))) + M_PI);
      err = add_up(err, mul_up(deriv, r));
    } else {
      double logmax = std::abs(std::log(lo1)) + std::log1p(z.abs_upper()) + M_PI;
      deriv = logmax / lo0;
      err = add_up(err, mul_up(2.0 * deriv, z.rad));
    }
  }
  return ComplexApprox(std::move(value), err);
}

}  // namespace chowreg

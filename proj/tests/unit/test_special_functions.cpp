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

#include <random>

#include "chowreg/error.hpp"
#include "chowreg/special_functions.hpp"
#include "doctest.h"

using chowreg::BranchSpec;
using chowreg::Complex;
using chowreg::ComplexApprox;
using chowreg::Real;
using chowreg::WorkingPrecision;

namespace {

Real from(const char* s) { return Real::from_string(s); }

bool close(const Complex& a, const Real& re, const Real& im, double tol) {
  return chowreg::abs(a.re - re) < Real(tol) && chowreg::abs(a.im - im) < Real(tol);
}

}  // namespace

TEST_CASE("pi_const") {
  auto p53 = chowreg::pi_const(53);
  CHECK(p53.mid.re.to_double() == 3.141592653589793);
  auto p256 = chowreg::pi_const(256);
  auto p128 = chowreg::pi_const(128);
  WorkingPrecision wp(256);
  CHECK(chowreg::abs(p256.mid.re - p128.mid.re) < Real(std::ldexp(1.0, -126)));
  CHECK(p256.rad < 1e-75);
}

TEST_CASE("log_eps examples") {
  WorkingPrecision wp(256);
  auto one = chowreg::log_eps(ComplexApprox(Complex(1L)), BranchSpec{Real(0.3)});
  CHECK(one.mid.is_zero());
  auto m1 = chowreg::log_eps(ComplexApprox(Complex(-1L)), BranchSpec{Real(0.1)});
  CHECK(m1.mid.re.is_zero());
  CHECK(chowreg::abs(m1.mid.im + Real::pi()) < Real(1e-70));
  auto m0 = chowreg::log_eps(ComplexApprox(Complex(-1L)), BranchSpec{Real(0L)});
  CHECK(chowreg::abs(m0.mid.im - Real::pi()) < Real(1e-70));
}

TEST_CASE("log_eps errors") {
  WorkingPrecision wp(128);
  CHECK_THROWS_AS(chowreg::log_eps(ComplexApprox(Complex(0L), 1e-5), BranchSpec{Real(0.1)}),
                  chowreg::Error);
  // Ball straddling the ray arg = pi - 0.1.
  Complex on_cut = Complex::polar(Real(2L), Real::pi() - Real(0.1));
  CHECK_THROWS_AS(chowreg::log_eps(ComplexApprox(on_cut, 1e-6), BranchSpec{Real(0.1)}),
                  chowreg::Error);
}

TEST_CASE("log_eps branches differ by multiples of 2 pi i") {
  WorkingPrecision wp(128);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_real_distribution<double> phase(0.0, 0.5);
  for (int trial = 0; trial < 100; ++trial) {
    Complex z(Real(coord(rng)), Real(coord(rng)));
    Real e1(phase(rng));
    Real e2(phase(rng));
    Complex d = chowreg::log_eps(z, e1) - chowreg::log_eps(z, e2);
    CHECK(chowreg::abs(d.re) < Real(1e-30));
    Real k = d.im / (Real::pi() * Real(2L));
    CHECK(chowreg::abs(k - chowreg::round(k)) < Real(1e-30));
    CHECK(chowreg::abs(chowreg::round(k)) <= Real(1L));
  }
}

TEST_CASE("li2 reference values") {
  WorkingPrecision wp(256);
  auto v1 = chowreg::li2(ComplexApprox(Complex(1L)));
  CHECK(close(v1.mid, from("1.644934066848226436472415166646025189219"), Real(0L), 1e-38));
  CHECK(chowreg::li2(ComplexApprox(Complex(0L))).mid.is_zero());
  auto vm1 = chowreg::li2(ComplexApprox(Complex(-1L)));
  CHECK(close(vm1.mid, from("-0.8224670334241132182362075833230125946095"), Real(0L), 1e-38));

  struct Case {
    double re, im;
    const char* want_re;
    const char* want_im;
  };
  const Case cases[] = {
      {0.3, 0.4, "0.2665968667427404158891081176870259318928", "0.4613628918191089942817785840396257621884"},
      {0.9, 0.3, "1.104986351524215724550395076009644732727", "0.6170530280848619838494205982427002441753"},
      {2.0, 1.0, "1.186688537000057831112800100406877183447", "2.407740769345772001713905275524847990699"},
      {-3.0, 0.0, "-1.939375420766708953077271719177891441223", "0.0"},
      {0.6, 0.8, "0.403311249888985387898940607830094369905", "1.008413037316935404316925101691968859747"},
      {-0.7, -0.7, "-0.6620779593227110458686517631853660864167", "-0.5199331279163728423429367804871294708496"},
  };
  for (const auto& c : cases) {
    auto v = chowreg::li2(ComplexApprox(Complex(Real(c.re), Real(c.im))));
    CHECK(close(v.mid, from(c.want_re), from(c.want_im), 1e-37));
    CHECK(v.rad < 1e-60);
  }
  // On the cut: limit from below.
  auto cut = chowreg::li2(ComplexApprox(Complex(3L)));
  CHECK(close(cut.mid, from("2.320180423313098396406194473703104657827"),
              from("-3.451392295223202661433820583818085645152"), 1e-37));
}

TEST_CASE("li2 against the alternating series oracle") {
  // -pi^2/12 = sum (-1)^k / k^2, summed with an Euler-transformed partial sum
  // so it is independent of the library path.
  WorkingPrecision wp(128);
  Real s(0L);
  const long n = 200000;
  for (long k = n; k >= 1; --k) {
    Real term = Real(1L) / (Real(k) * Real(k));
    s = (k % 2 == 1) ? s - term : s + term;
  }
  // Alternating tail bound: error < 1/(n+1)^2.
  auto v = chowreg::li2(ComplexApprox(Complex(-1L)));
  CHECK(chowreg::abs(v.mid.re - s) < Real(1.0 / ((n + 1.0) * (n + 1.0))));
  // li2(1) / pi^2 = 1/6
  auto one = chowreg::li2(ComplexApprox(Complex(1L)));
  Real pi = Real::pi();
  CHECK(chowreg::abs(one.mid.re / (pi * pi) - Real(1L) / Real(6L)) < Real(1e-15));
}

TEST_CASE("li2 reflection identity on random points") {
  WorkingPrecision wp(128);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int checked = 0;
  while (checked < 100) {
    Complex z(Real(u(rng)), Real(u(rng)));
    if (chowreg::abs(z) >= Real(0.98) || z.im.is_zero()) continue;
    ++checked;
    auto a = chowreg::li2(ComplexApprox(z));
    auto b = chowreg::li2(ComplexApprox(Complex(1L) - z));
    Real pi = Real::pi();
    Complex rhs = Complex(pi * pi / Real(6L)) - chowreg::log(z) * chowreg::log(Complex(1L) - z);
    Complex lhs = a.mid + b.mid;
    double tol = a.rad + b.rad + 1e-30;
    CHECK(chowreg::abs(lhs - rhs) <= Real(tol));
  }
}

TEST_CASE("li2 inversion identity on random points") {
  WorkingPrecision wp(128);
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  int checked = 0;
  while (checked < 100) {
    Complex z(Real(u(rng)), Real(u(rng)));
    if (chowreg::abs(z) <= Real(1.02) || chowreg::abs(z.im) < Real(1e-3)) continue;
    ++checked;
    auto a = chowreg::li2(ComplexApprox(z));
    auto b = chowreg::li2(ComplexApprox(Complex(1L) / z));
    Real pi = Real::pi();
    Complex l = chowreg::log(-z);
    Complex rhs = Complex(-(pi * pi) / Real(6L)) - l * l / Real(2L);
    CHECK(chowreg::abs(a.mid + b.mid - rhs) <= Real(a.rad + b.rad + 1e-30));
  }
}

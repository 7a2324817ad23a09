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

#include "chowreg/divisor.hpp"

#include <cmath>
#include <sstream>

#include "chowreg/error.hpp"

namespace chowreg {

namespace {

std::vector<ComplexApprox> embed_coeffs(const Poly& p, long bits) {
  std::vector<ComplexApprox> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(embed(c, bits));
  return out;
}

ComplexApprox horner_ball(const std::vector<ComplexApprox>& c, const ComplexApprox& z) {
  ComplexApprox acc(Complex(0L));
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

// Aberth-Ehrlich iteration for a squarefree polynomial of degree >= 1.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, long bits) {
  const int d = static_cast<int>(coeffs.size()) - 1;
  std::vector<Complex> c(coeffs.size());
  for (int k = 0; k <= d; ++k) c[k] = coeffs[k] / coeffs[d];
  if (d == 1) return {-c[0]};

  Real bound(0L);
  for (int k = 0; k < d; ++k) bound = max(bound, abs(c[k]));
  bound += Real(1L);
  Complex center = -c[d - 1] / Real(static_cast<long>(d));
  Real radius = bound * Real(0.5);
  std::vector<Complex> z(d);
  for (int j = 0; j < d; ++j) {
    Real theta = Real::pi() * Real(2L * j) / Real(static_cast<long>(d)) + Real(0.4);
    z[j] = center + Complex::polar(radius, theta);
  }

  const double tol = std::ldexp(1.0, static_cast<int>(-bits + 8));
  const int max_iter = 200 + static_cast<int>(bits) * 4;
  std::vector<Complex> dc(d);
  for (int k = 1; k <= d; ++k) dc[k - 1] = c[k] * Real(static_cast<long>(k));
  for (int iter = 0; iter < max_iter; ++iter) {
    double worst = 0.0;
    for (int j = 0; j < d; ++j) {
      Complex dp;
      Complex p = horner(c, z[j], &dp);
      if (p.is_zero()) continue;
      Complex w = p / dp;
      Complex s(0L);
      for (int k = 0; k < d; ++k) {
        if (k != j) s += Complex(1L) / (z[j] - z[k]);
      }
      Complex step = w / (Complex(1L) - w * s);
      z[j] -= step;
      double rel = abs(step).to_double() / std::max(1.0, abs(z[j]).to_double());
      worst = std::max(worst, rel);
    }
    if (worst < tol) return z;
  }
  std::ostringstream msg;
  msg << "root refinement did not converge (degree " << d << ", " << bits << " bits)";
  fail(ErrorClass::kConvergence, msg.str());
}

namespace {

// Roots of a squarefree polynomial with certified disjoint discs of radius
// d |p(z)| / |p'(z)|; each disc then holds exactly one root.
std::vector<ComplexApprox> certified_simple_roots(const Poly& s, long bits) {
  WorkingPrecision wp(bits + 32);
  std::vector<Complex> mids;
  for (const auto& c : s.coeffs()) mids.push_back(embed(c, bits + 32).mid);
  std::vector<Complex> z = polynomial_roots(mids, bits + 32);

  const int d = s.degree();
  std::vector<ComplexApprox> balls = embed_coeffs(s, bits + 32);
  std::vector<ComplexApprox> dballs;
  for (int k = 1; k <= d; ++k) {
    dballs.push_back(balls[k] * ComplexApprox(Complex(static_cast<long>(k))));
  }
  std::vector<ComplexApprox> out;
  for (const auto& zj : z) {
    ComplexApprox at(zj);
    ComplexApprox p = horner_ball(balls, at);
    ComplexApprox dp = horner_ball(dballs, at);
    double lo = dp.abs_lower();
    if (lo == 0.0) fail(ErrorClass::kPrecision, "root certification: derivative ball contains 0");
    double r = mul_up(static_cast<double>(d), p.abs_upper() / std::nextafter(lo, 0.0));
    r = add_up(r, rounding_bound(zj));
    out.emplace_back(zj, r);
  }
  for (size_t i = 0; i < out.size(); ++i) {
    for (size_t j = i + 1; j < out.size(); ++j) {
      if (out[i].overlaps(out[j])) {
        fail(ErrorClass::kPrecision, "root certification: inclusion discs overlap");
      }
    }
  }
  return out;
}

bool small_relative(const Real& x, const Real& scale, long bits) {
  Real s = max(abs(scale), Real(1L));
  return abs(x) <= ldexp(s, -bits / 2);
}

// Tries to write a numeric root as an element of Q(zeta_N).
bool recognize(const Complex& z, int order, long bits, std::vector<CyclotomicNumber>& cands) {
  Rational q;
  Real scale = abs(z);
  if (small_relative(z.im, scale, bits) && recognize_rational(z.re, bits, q)) {
    cands.push_back(CyclotomicNumber::rational(order, q));
  }
  // Real multiples of roots of unity.
  for (int k = 1; k < order; ++k) {
    Complex w = z * embed(CyclotomicNumber::zeta(order, -k), bits + 32).mid;
    if (small_relative(w.im, scale, bits) && recognize_rational(w.re, bits, q) && q != 0) {
      cands.push_back(CyclotomicNumber::rational(order, q) * CyclotomicNumber::zeta(order, k));
    }
  }
  // a + b zeta in a quadratic field.
  if (euler_phi(order) == 2) {
    Complex xi = embed(CyclotomicNumber::zeta(order, 1), bits + 32).mid;
    Real b = z.im / xi.im;
    Real a = z.re - b * xi.re;
    Rational qa, qb;
    if (recognize_rational(a, bits, qa) && recognize_rational(b, bits, qb)) {
      cands.push_back(CyclotomicNumber(order, {qa, qb}));
    }
  }
  return !cands.empty();
}

// Splits a monic squarefree factor into exact roots in the field and a
// numeric remainder.
void split_factor(Poly s, long bits, std::vector<CyclotomicNumber>& exact,
                  std::vector<ComplexApprox>& numeric) {
  const int order = s.order();
  while (s.degree() >= 1) {
    if (s.degree() == 1) {
      exact.push_back(-s.coeff(0) / s.coeff(1));
      return;
    }
    std::vector<ComplexApprox> roots = certified_simple_roots(s, bits);
    bool found = false;
    for (const auto& r : roots) {
      WorkingPrecision wp(bits + 32);
      std::vector<CyclotomicNumber> cands;
      if (!recognize(r.mid, order, bits, cands)) continue;
      for (const auto& c : cands) {
        if (!s.eval(c).is_zero()) continue;
        exact.push_back(c);
        Poly q, rem;
        divmod(s, Poly::t(order) - Poly::constant(c), q, rem);
        s = q.monic();
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) {
      numeric.insert(numeric.end(), roots.begin(), roots.end());
      return;
    }
  }
}

void add_points(const Poly& p, int sign, long bits, std::vector<DivisorPoint>& out) {
  for (const auto& [s, k] : squarefree_decomposition(p)) {
    std::vector<CyclotomicNumber> exact;
    std::vector<ComplexApprox> numeric;
    split_factor(s, bits, exact, numeric);
    for (auto& c : exact) out.push_back({P1Point(std::move(c)), sign * k});
    for (auto& z : numeric) out.push_back({P1Point(std::move(z)), sign * k});
  }
}

}  // namespace

ComplexApprox P1Point::numeric(long precision_bits) const {
  if (is_infinity()) fail(ErrorClass::kDomain, "numeric value of the point at infinity");
  if (is_exact()) return embed(exact(), precision_bits);
  return approx();
}

std::string P1Point::to_string(int digits) const {
  if (is_infinity()) return "inf";
  if (is_exact()) return exact().to_string();
  const auto& z = approx();
  std::ostringstream os;
  os << "~(" << z.mid.re.to_string(digits) << " + " << z.mid.im.to_string(digits) << "*i)";
  return os.str();
}

PointMatch compare_points(const P1Point& a, const P1Point& b, long precision_bits) {
  if (a.is_infinity() || b.is_infinity()) {
    return a.is_infinity() && b.is_infinity() ? PointMatch::kSame : PointMatch::kDistinct;
  }
  if (a.is_exact() && b.is_exact()) {
    int m = common_order(a.exact().order(), b.exact().order());
    return a.exact().promote(m) == b.exact().promote(m) ? PointMatch::kSame
                                                         : PointMatch::kDistinct;
  }
  WorkingPrecision wp(precision_bits);
  ComplexApprox x = a.numeric(precision_bits);
  ComplexApprox y = b.numeric(precision_bits);
  if (!x.overlaps(y)) return PointMatch::kDistinct;
  double tiny = std::ldexp(1.0, static_cast<int>(-precision_bits / 3));
  return add_up(x.rad, y.rad) <= tiny ? PointMatch::kSame : PointMatch::kUndecided;
}

P1Point eval(const RationalFunction& f, const P1Point& at, long precision_bits) {
  const Poly& n = f.num();
  const Poly& d = f.den();
  if (at.is_infinity()) {
    if (n.degree() > d.degree()) return P1Point::infinity();
    if (n.degree() < d.degree()) return CyclotomicNumber::integer(f.order(), 0);
    return n.leading() / d.leading();
  }
  if (at.is_exact()) {
    CyclotomicNumber dv = d.eval(at.exact());
    if (dv.is_zero()) return P1Point::infinity();
    return n.eval(at.exact()) / dv;
  }
  WorkingPrecision wp(precision_bits);
  ComplexApprox nv = horner_ball(embed_coeffs(n, precision_bits), at.approx());
  ComplexApprox dv = horner_ball(embed_coeffs(d, precision_bits), at.approx());
  if (dv.contains_zero()) {
    if (nv.contains_zero()) {
      fail(ErrorClass::kPrecision, "evaluation undecided: numerator and denominator balls contain 0");
    }
    return P1Point::infinity();
  }
  return nv / dv;
}

P1Point eval(const RationalFunction& f, const P1Point& at) {
  return eval(f, at, WorkingPrecision::bits());
}

std::vector<NumericRoot> roots_numeric(const Poly& p, long precision_bits) {
  if (p.is_zero()) fail(ErrorClass::kDomain, "roots of the zero polynomial");
  std::vector<NumericRoot> out;
  for (const auto& [s, k] : squarefree_decomposition(p)) {
    for (auto& z : certified_simple_roots(s, precision_bits)) out.push_back({std::move(z), k});
  }
  return out;
}

std::vector<DivisorPoint> divisor(const RationalFunction& f, long precision_bits) {
  if (f.is_zero()) fail(ErrorClass::kDomain, "divisor of the zero function");
  std::vector<DivisorPoint> out;
  add_points(f.num(), +1, precision_bits, out);
  add_points(f.den(), -1, precision_bits, out);
  int at_inf = f.den().degree() - f.num().degree();
  if (at_inf != 0) out.push_back({P1Point::infinity(), at_inf});
  return out;
}

std::vector<DivisorPoint> divisor(const RationalFunction& f) {
  return divisor(f, WorkingPrecision::bits());
}

Complex horner(const std::vector<Complex>& c, const Complex& z, Complex* dp) {
  Complex p(0L);
  Complex d(0L);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (dp) d = d * z + p;
    p = p * z + *it;
  }
  if (dp) *dp = std::move(d);
  return p;
}

NumericRational::NumericRational(const RationalFunction& f) {
  for (const auto& c : f.num().coeffs()) num_.push_back(embed(c).mid);
  for (const auto& c : f.den().coeffs()) den_.push_back(embed(c).mid);
}

Complex NumericRational::value(const Complex& t) const {
  return horner(num_, t) / horner(den_, t);
}

void NumericRational::value_and_derivative(const Complex& t, Complex& f, Complex& df) const {
  Complex dn, dd;
  Complex n = horner(num_, t, &dn);
  Complex d = horner(den_, t, &dd);
  f = n / d;
  df = (dn * d - n * dd) / (d * d);
}

Complex NumericRational::dlog(const Complex& t) const {
  Complex dn, dd;
  Complex n = horner(num_, t, &dn);
  Complex d = horner(den_, t, &dd);
  return dn / n - dd / d;
}

bool recognize_rational(const Real& x, long precision_bits, Rational& out) {
  WorkingPrecision wp(precision_bits + 32);
  mpz_class max_den = mpz_class(1) << static_cast<unsigned>(precision_bits / 4);
  // Continued-fraction convergents h/k.
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Real r = x;
  for (int iter = 0; iter < 200; ++iter) {
    Real fl = floor(r);
    mpz_class a;
    mpfr_get_z(a.get_mpz_t(), fl.get(), MPFR_RNDN);
    mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    Rational cand(h1, k1);
    cand.canonicalize();
    if (small_relative(x - Real(cand), x, precision_bits)) {
      out = cand;
      return true;
    }
    Real frac = r - fl;
    if (frac.is_zero()) break;
    r = Real(1L) / frac;
  }
  return false;
}

}  // namespace chowreg

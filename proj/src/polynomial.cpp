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

#include "chowreg/polynomial.hpp"

#include <algorithm>

#include "chowreg/error.hpp"

namespace chowreg {

namespace {

CyclotomicNumber zero_of(int order) { return CyclotomicNumber::integer(order, 0); }

// Both operands lifted to the compositum.
std::pair<Poly, Poly> lift(const Poly& a, const Poly& b) {
  if (a.order() == b.order()) return {a, b};
  int m = common_order(a.order(), b.order());
  return {a.promote(m), b.promote(m)};
}

std::string term_string(const CyclotomicNumber& c, int k) {
  std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
  if (k == 0) {
    std::string s = c.to_string();
    return c.is_rational() ? s : "(" + s + ")";
  }
  if (c.is_one()) return mono;
  if ((-c).is_one()) return "-" + mono;
  std::string s = c.to_string();
  if (c.is_rational()) return s + "*" + mono;
  return "(" + s + ")*" + mono;
}

}  // namespace

Poly::Poly(int order, std::vector<CyclotomicNumber> coeffs) : order_(order) {
  coeffs_.reserve(coeffs.size());
  for (auto& c : coeffs) {
    if (c.order() == order) {
      coeffs_.push_back(std::move(c));
    } else {
      coeffs_.push_back(c.promote(order));
    }
  }
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const CyclotomicNumber& c) { return Poly(c.order(), {c}); }

Poly Poly::monomial(const CyclotomicNumber& c, int degree) {
  if (degree < 0) fail(ErrorClass::kDomain, "negative monomial degree");
  std::vector<CyclotomicNumber> v(degree + 1, zero_of(c.order()));
  v[degree] = c;
  return Poly(c.order(), std::move(v));
}

Poly Poly::t(int order) { return monomial(CyclotomicNumber::integer(order, 1), 1); }

CyclotomicNumber Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return zero_of(order_);
  return coeffs_[k];
}

CyclotomicNumber Poly::eval(const CyclotomicNumber& x) const {
  int m = common_order(order_, x.order());
  CyclotomicNumber xv = x.promote(m);
  CyclotomicNumber acc = zero_of(m);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * xv + it->promote(m);
  }
  return acc;
}

Poly Poly::derivative() const {
  std::vector<CyclotomicNumber> v;
  for (int k = 1; k <= degree(); ++k) {
    v.push_back(CyclotomicNumber::integer(order_, k) * coeffs_[k]);
  }
  return Poly(order_, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

Poly Poly::promote(int new_order) const {
  if (new_order == order_) return *this;
  std::vector<CyclotomicNumber> v;
  for (const auto& c : coeffs_) v.push_back(c.promote(new_order));
  return Poly(new_order, std::move(v));
}

Poly Poly::compose(const Poly& g) const {
  auto [p, q] = lift(*this, g);
  Poly acc(p.order());
  for (int k = p.degree(); k >= 0; --k) acc = acc * q + constant(p.coeffs_[k]);
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (coeffs_[k].is_zero()) continue;
    std::string term = term_string(coeffs_[k], k);
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator+(const Poly& a0, const Poly& b0) {
  auto [a, b] = lift(a0, b0);
  std::vector<CyclotomicNumber> v(std::max(a.coeffs_.size(), b.coeffs_.size()),
                                  zero_of(a.order_));
  for (size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
  return Poly(a.order_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a0, const Poly& b0) {
  auto [a, b] = lift(a0, b0);
  if (a.is_zero() || b.is_zero()) return Poly(a.order_);
  std::vector<CyclotomicNumber> v(a.coeffs_.size() + b.coeffs_.size() - 1,
                                  zero_of(a.order_));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(a.order_, std::move(v));
}

Poly operator*(const CyclotomicNumber& c, const Poly& p) {
  return Poly::constant(c) * p;
}

void divmod(const Poly& a0, const Poly& b0, Poly& quotient, Poly& remainder) {
  auto [a, b] = lift(a0, b0);
  if (b.is_zero()) fail(ErrorClass::kDomain, "polynomial division by zero");
  int order = a.order();
  CyclotomicNumber lead_inv = b.leading().inverse();
  std::vector<CyclotomicNumber> r = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  std::vector<CyclotomicNumber> q(std::max(dq + 1, 0), zero_of(order));
  for (int k = dq; k >= 0; --k) {
    CyclotomicNumber c = r[k + db] * lead_inv;
    if (c.is_zero()) continue;
    q[k] = c;
    for (int j = 0; j <= db; ++j) r[k + j] -= c * b.coeffs()[j];
  }
  quotient = Poly(order, std::move(q));
  remainder = Poly(order, std::move(r));
}

Poly gcd(const Poly& a0, const Poly& b0) {
  auto [a, b] = lift(a0, b0);
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly pow(const Poly& p, int e) {
  if (e < 0) fail(ErrorClass::kDomain, "negative polynomial power");
  Poly result = Poly::constant(CyclotomicNumber::integer(p.order(), 1));
  Poly base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() < 1) return out;
  Poly f = p.monic();
  Poly df = f.derivative();
  Poly a = gcd(f, df);
  Poly b, c, d, rem;
  divmod(f, a, b, rem);
  divmod(df, a, c, rem);
  d = c - b.derivative();
  for (int k = 1; b.degree() >= 1; ++k) {
    Poly s = gcd(b, d);
    if (s.degree() >= 1) out.emplace_back(s, k);
    Poly nb, nc;
    divmod(b, s, nb, rem);
    divmod(d, s, nc, rem);
    b = nb;
    d = nc - b.derivative();
  }
  return out;
}

RationalFunction::RationalFunction(int order)
    : num_(order), den_(Poly::constant(CyclotomicNumber::integer(order, 1))) {}

RationalFunction::RationalFunction(const Poly& p)
    : num_(p), den_(Poly::constant(CyclotomicNumber::integer(p.order(), 1))) {}

RationalFunction::RationalFunction(Poly num, Poly den) {
  auto [n, d] = lift(num, den);
  if (d.is_zero()) fail(ErrorClass::kDomain, "rational function with zero denominator");
  int order = n.order();
  if (n.is_zero()) {
    num_ = Poly(order);
    den_ = Poly::constant(CyclotomicNumber::integer(order, 1));
    return;
  }
  Poly g = gcd(n, d);
  Poly rem;
  if (g.degree() >= 1) {
    Poly nq, dq;
    divmod(n, g, nq, rem);
    divmod(d, g, dq, rem);
    n = std::move(nq);
    d = std::move(dq);
  }
  CyclotomicNumber li = d.leading().inverse();
  num_ = li * n;
  den_ = li * d;
}

RationalFunction RationalFunction::constant(const CyclotomicNumber& c) {
  return RationalFunction(Poly::constant(c));
}

RationalFunction RationalFunction::t(int order) { return RationalFunction(Poly::t(order)); }

CyclotomicNumber RationalFunction::constant_value() const {
  if (!is_constant()) fail(ErrorClass::kDomain, "rational function is not constant");
  return num_.coeff(0);
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                          den_ * den_);
}

RationalFunction RationalFunction::compose(const RationalFunction& g) const {
  if (g.is_constant()) fail(ErrorClass::kDomain, "composition with a constant");
  int d = degree();
  int m = common_order(order(), g.order());
  Poly gn = g.num().promote(m);
  Poly gd = g.den().promote(m);
  // sum_k c_k G^k H^(d-k), for numerator and denominator.
  std::vector<Poly> gpow{Poly::constant(CyclotomicNumber::integer(m, 1))};
  std::vector<Poly> hpow{gpow[0]};
  for (int k = 1; k <= d; ++k) {
    gpow.push_back(gpow.back() * gn);
    hpow.push_back(hpow.back() * gd);
  }
  auto homogenize = [&](const Poly& p) {
    Poly acc(m);
    for (int k = 0; k <= p.degree(); ++k) {
      acc = acc + p.coeff(k).promote(m) * (gpow[k] * hpow[d - k]);
    }
    return acc;
  };
  Poly den = homogenize(den_);
  if (den.is_zero()) fail(ErrorClass::kDomain, "composition has zero denominator");
  return RationalFunction(homogenize(num_), den);
}

RationalFunction RationalFunction::promote(int new_order) const {
  RationalFunction r(new_order);
  r.num_ = num_.promote(new_order);
  r.den_ = den_.promote(new_order);
  return r;
}

RationalFunction RationalFunction::pow(int e) const {
  if (e >= 0) return RationalFunction(chowreg::pow(num_, e), chowreg::pow(den_, e));
  if (is_zero()) fail(ErrorClass::kDomain, "negative power of zero");
  return RationalFunction(chowreg::pow(den_, -e), chowreg::pow(num_, -e));
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  auto wrap = [](const Poly& p) {
    std::string s = p.to_string();
    bool atomic = p.coeffs().size() <= 1;
    if (!atomic && p.leading().is_one()) {
      atomic = true;
      for (int k = 0; k < p.degree(); ++k) atomic = atomic && p.coeff(k).is_zero();
    }
    return atomic ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num() * g.den() + g.num() * f.den(), f.den() * g.den());
}

RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
  return f + (-g);
}

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num() * g.num(), f.den() * g.den());
}

RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
  if (g.is_zero()) fail(ErrorClass::kDomain, "division by the zero function");
  return RationalFunction(f.num() * g.den(), f.den() * g.num());
}

RationalFunction rf_arith(const RationalFunction& f, const RationalFunction& g, RfOp op) {
  switch (op) {
    case RfOp::kAdd: return f + g;
    case RfOp::kSub: return f - g;
    case RfOp::kMul: return f * g;
    case RfOp::kDiv: return f / g;
    case RfOp::kCompose: return f.compose(g);
  }
  fail(ErrorClass::kDomain, "unknown operation");
}

RationalFunction join_coordinates(const RationalFunction& f, const RationalFunction& g) {
  RationalFunction one = RationalFunction::constant(CyclotomicNumber::integer(f.order(), 1));
  RationalFunction s = f + g - one;
  if (s.is_zero()) fail(ErrorClass::kDomain, "join: f + g - 1 vanishes identically");
  return f * g / s;
}

}  // namespace chowreg

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

#ifndef CHOWREG_POLYNOMIAL_HPP
#define CHOWREG_POLYNOMIAL_HPP

// Univariate polynomials and rational functions in t over Q(zeta_N).

#include <string>
#include <utility>
#include <vector>

#include "chowreg/cyclotomic.hpp"

namespace chowreg {

class Poly {
 public:
  Poly() : Poly(1) {}
  explicit Poly(int order) : order_(order) {}
  /// Coefficients constant term first; trailing zeros are dropped.
  Poly(int order, std::vector<CyclotomicNumber> coeffs);

  static Poly constant(const CyclotomicNumber& c);
  static Poly monomial(const CyclotomicNumber& c, int degree);
  /// The polynomial t.
  static Poly t(int order);

  int order() const { return order_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<CyclotomicNumber>& coeffs() const { return coeffs_; }
  /// Coefficient of t^k (zero beyond the degree).
  CyclotomicNumber coeff(int k) const;
  const CyclotomicNumber& leading() const { return coeffs_.back(); }

  CyclotomicNumber eval(const CyclotomicNumber& x) const;
  Poly derivative() const;
  Poly monic() const;
  Poly promote(int new_order) const;
  /// p(t) -> p(g) for a polynomial g.
  Poly compose(const Poly& g) const;

  std::string to_string() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const CyclotomicNumber& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim();

  int order_;
  std::vector<CyclotomicNumber> coeffs_;
};

/// Euclidean division a = q b + r with deg r < deg b. Throws on b == 0.
void divmod(const Poly& a, const Poly& b, Poly& quotient, Poly& remainder);
/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& p, int e);

/// Yun's algorithm: p = c * prod_k s_k^k with each s_k monic, squarefree and
/// pairwise coprime. Returns the nonconstant (s_k, k).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

class RationalFunction {
 public:
  RationalFunction() : RationalFunction(1) {}
  explicit RationalFunction(int order);
  /// Reduces to canonical form: coprime, monic denominator. Throws on den == 0.
  RationalFunction(Poly num, Poly den);
  RationalFunction(const Poly& p);  // NOLINT(google-explicit-constructor)

  static RationalFunction constant(const CyclotomicNumber& c);
  static RationalFunction t(int order);

  int order() const { return num_.order(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Valid only when is_constant().
  CyclotomicNumber constant_value() const;
  /// Degree as a map P^1 -> P^1 (0 for constants).
  int degree() const { return std::max(num_.degree(), den_.degree()); }

  RationalFunction derivative() const;
  /// f(g(t)); g must be nonconstant.
  RationalFunction compose(const RationalFunction& g) const;
  RationalFunction promote(int new_order) const;
  RationalFunction pow(int e) const;

  std::string to_string() const;

  RationalFunction operator-() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

 private:
  Poly num_;
  Poly den_;
};

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
RationalFunction operator-(const RationalFunction& f, const RationalFunction& g);
RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);
RationalFunction operator/(const RationalFunction& f, const RationalFunction& g);

enum class RfOp { kAdd, kSub, kMul, kDiv, kCompose };

RationalFunction rf_arith(const RationalFunction& f, const RationalFunction& g, RfOp op);

/// f g / (f + g - 1), the coordinate-joining substitution used by the
/// normalization operator. Throws when f + g - 1 vanishes identically.
RationalFunction join_coordinates(const RationalFunction& f, const RationalFunction& g);

}  // namespace chowreg

#endif  // CHOWREG_POLYNOMIAL_HPP

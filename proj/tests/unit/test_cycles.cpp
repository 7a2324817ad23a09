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

#include "chowreg/cycles.hpp"
#include "chowreg/error.hpp"
#include "chowreg/fixtures.hpp"
#include "doctest.h"

using chowreg::CurveComponent;
using chowreg::CyclotomicNumber;
using chowreg::P1Point;
using chowreg::PointPrecycle;
using chowreg::Precycle;
using chowreg::Rational;
using chowreg::RationalFunction;

namespace {

constexpr long kBits = 128;

RationalFunction rf(const std::string& s, int order = 1) {
  return chowreg::parse_expression(s, order);
}

Precycle curve(int n, std::vector<std::vector<std::string>> comps, int order = 1) {
  std::vector<CurveComponent> cs;
  for (const auto& c : comps) {
    CurveComponent cc;
    for (const auto& s : c) cc.coords.push_back(rf(s, order));
    cs.push_back(cc);
  }
  return chowreg::make_precycle(n, cs);
}

CyclotomicNumber q(long a, long b = 1) { return CyclotomicNumber::rational(1, Rational(a, b)); }

RationalFunction constant(const CyclotomicNumber& c) { return RationalFunction::constant(c); }

bool same_points(const PointPrecycle& a, const PointPrecycle& b) {
  PointPrecycle d = a;
  for (auto c : b.components) {
    c.mult = -c.mult;
    d.components.push_back(c);
  }
  return chowreg::reduce(d, kBits).empty();
}

}  // namespace

TEST_CASE("face properness examples") {
  CHECK(chowreg::check_face_proper(chowreg::fixture("z1_totaro").curve, kBits).ok);
  auto bad = chowreg::check_face_proper(curve(2, {{"t", "1-t"}}), kBits);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].parameter.is_infinity());
  CHECK(chowreg::check_face_proper(curve(2, {{"t", "5"}}), kBits).ok);
  CHECK(chowreg::check_face_proper(chowreg::fixture("petras_zeta5").curve, kBits).ok);
  CHECK(chowreg::check_face_proper(chowreg::fixture("mccarthy_counterexample").curve, kBits).ok);
}

TEST_CASE("boundary examples") {
  CHECK(chowreg::boundary(chowreg::fixture("z1_totaro").curve, kBits).empty());

  PointPrecycle b = chowreg::boundary(chowreg::fixture("graph_4_2").curve, kBits);
  REQUIRE(b.components.size() == 2);
  for (const auto& c : b.components) {
    REQUIRE(c.coords.size() == 1);
    if (c.coords[0].exact() == q(4)) {
      CHECK(c.mult == 1);
    } else {
      CHECK(c.coords[0].exact() == q(2));
      CHECK(c.mult == -2);
    }
  }
  Precycle empty = chowreg::make_precycle(3, {});
  CHECK(chowreg::boundary(empty, kBits).empty());

  CHECK_THROWS_AS(chowreg::boundary(curve(2, {{"t", "1-t"}}), kBits), chowreg::Error);
}

TEST_CASE("closedness") {
  CHECK(chowreg::is_closed(chowreg::fixture("z1_totaro").curve, kBits));
  CHECK(chowreg::is_closed(chowreg::fixture("petras_zeta5").curve, kBits));
  // z_1 = inf at t = inf leaves the uncancelled point (-3i/2, i).
  CHECK_FALSE(chowreg::is_closed(chowreg::fixture("mccarthy_counterexample").curve, kBits));
  CHECK_FALSE(chowreg::is_closed(chowreg::fixture("graph_4_2").curve, kBits));
  CHECK_FALSE(chowreg::is_closed(chowreg::fixture("z_minus1").curve, kBits));
}

TEST_CASE("degeneracy") {
  CurveComponent d{{rf("t"), rf("2"), rf("3")}, 1};
  CHECK(chowreg::is_degenerate(d));
  CurveComponent m{{rf("(2*t-1)/(t+3)"), rf("2")}, 1};
  CHECK(chowreg::is_degenerate(m));
  CHECK_FALSE(chowreg::is_degenerate(chowreg::fixture("z1_totaro").curve.components[0]));
  CurveComponent sq{{rf("t^2"), rf("2")}, 1};
  CHECK_FALSE(chowreg::is_degenerate(sq));

  // Degenerate components do not change closedness.
  Precycle z = chowreg::fixture("z1_totaro").curve;
  z.components.push_back(d);
  z = chowreg::make_precycle(3, z.components);
  CHECK(chowreg::is_closed(z, kBits));
  CHECK(chowreg::drop_degenerate(z).components.size() == 1);
}

TEST_CASE("component invariants") {
  CHECK_THROWS_AS(curve(2, {{"t", "1"}}), chowreg::Error);
  CHECK_THROWS_AS(curve(2, {{"t", "0"}}), chowreg::Error);
  CHECK_THROWS_AS(curve(2, {{"2", "3"}}), chowreg::Error);
  Precycle twice = curve(2, {{"t", "(t-4)/(t-2)"}, {"t", "(t-4)/(t-2)"}});
  REQUIRE(twice.components.size() == 1);
  CHECK(twice.components[0].mult == 2);
}

TEST_CASE("face vanishing profile") {
  auto z1 = chowreg::face_vanishing_profile(chowreg::fixture("z1_totaro").curve, kBits);
  for (const auto& e : z1.entries) CHECK(e.vanishes);
  CHECK(z1.normalized());
  auto pet = chowreg::face_vanishing_profile(chowreg::fixture("petras_zeta5").curve, kBits);
  CHECK(pet.normalized());
  CHECK(pet.vanishes(3, true));
  auto g = chowreg::face_vanishing_profile(chowreg::fixture("graph_4_2").curve, kBits);
  CHECK_FALSE(g.vanishes(1, false));
  CHECK_FALSE(g.normalized());
}

TEST_CASE("normalize examples") {
  Precycle z1 = chowreg::fixture("z1_totaro").curve;
  CHECK(chowreg::normalize(z1, kBits).components.size() == 1);
  CHECK(chowreg::normalize(z1, kBits).components[0].to_string() == z1.components[0].to_string());
  CHECK(chowreg::normalize(chowreg::make_precycle(2, {}), kBits).empty());

  // Facet z_1 = inf of ((t-1)/(t-3), 1/t) is the point 1/3.
  Precycle z = curve(2, {{"(t-1)/(t-3)", "1/t"}});
  PointPrecycle inf1 = chowreg::facet(z, 1, true, kBits);
  REQUIRE(inf1.components.size() == 1);
  CHECK(inf1.components[0].coords[0].exact() == q(1, 3));
  Precycle nz = chowreg::normalize(z, kBits);
  Precycle expected = chowreg::make_precycle(
      2, {z.components[0], CurveComponent{{rf("t"), rf("(1/3)*(t-1)/(t-1/3)")}, -1}});
  REQUIRE(nz.components.size() == expected.components.size());
  for (size_t k = 0; k < nz.components.size(); ++k) {
    CHECK(nz.components[k].to_string() == expected.components[k].to_string());
    CHECK(nz.components[k].mult == expected.components[k].mult);
  }
  CHECK(chowreg::face_vanishing_profile(nz, kBits).normalized());

  CHECK_THROWS_AS(chowreg::normalize(chowreg::fixture("graph_4_2").curve, kBits),
                  chowreg::Error);
}

TEST_CASE("normalize on random zero-facet-free curves") {
  // ((t^k - 1)/v(t), 1/t^k) with v monic of degree k: every zero facet
  // lands on a coordinate equal to 1, the infinity facets do not.
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> root(-9, 9);
  std::uniform_int_distribution<int> kdist(1, 2);
  std::uniform_int_distribution<int> mdist(-2, 2);
  RationalFunction t = RationalFunction::t(1);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<CurveComponent> comps;
    for (int j = 0; j < 2; ++j) {
      int k = kdist(rng);
      RationalFunction v = constant(q(1));
      std::vector<int> used;
      while (static_cast<int>(used.size()) < k) {
        int r = root(rng);
        CyclotomicNumber x = q(r, 2 + trial % 3);
        if (r == 0 || x.pow(k).is_one()) continue;
        if (std::find(used.begin(), used.end(), r) != used.end()) continue;
        used.push_back(r);
        v = v * (t - constant(x));
      }
      long m = mdist(rng);
      if (m == 0) m = 1;
      comps.push_back({{(t.pow(k) - constant(q(1))) / v, t.pow(-k)}, m});
    }
    Precycle z = chowreg::make_precycle(2, comps);
    auto prof = chowreg::face_vanishing_profile(z, kBits);
    for (const auto& e : prof.entries) {
      if (!e.at_infinity) CHECK(e.vanishes);
    }
    Precycle n1 = chowreg::normalize(z, kBits);
    CHECK(chowreg::face_vanishing_profile(n1, kBits).normalized());
    Precycle n2 = chowreg::normalize(n1, kBits);
    REQUIRE(n1.components.size() == n2.components.size());
    for (size_t c = 0; c < n1.components.size(); ++c) {
      CHECK(n1.components[c].to_string() == n2.components[c].to_string());
      CHECK(n1.components[c].mult == n2.components[c].mult);
    }
    // The correction terms have zero boundary.
    CHECK(same_points(chowreg::boundary(n1, kBits), chowreg::boundary(z, kBits)));
  }
}

TEST_CASE("two-step facet identity") {
  // Coordinates are products of simple linear factors drawn from a shared
  // pool, so codimension-2 faces are actually met.
  std::mt19937 rng(22);
  const long pool[] = {0, 2, -3, 5, -7};
  std::uniform_int_distribution<int> pick(0, 4);
  std::uniform_int_distribution<int> cdist(2, 6);
  RationalFunction t = RationalFunction::t(1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RationalFunction> coords;
    for (int k = 0; k < 3; ++k) {
      int a = pick(rng);
      int b = pick(rng);
      while (b == a) b = pick(rng);
      coords.push_back(constant(q(cdist(rng))) * (t - constant(q(pool[a]))) /
                       (t - constant(q(pool[b]))));
    }
    Precycle z = chowreg::make_precycle(3, {CurveComponent{coords, 1}});
    for (int i = 1; i <= 3; ++i) {
      for (int j = i + 1; j <= 3; ++j) {
        for (bool a : {false, true}) {
          for (bool b : {false, true}) {
            PointPrecycle lhs = chowreg::facet(chowreg::facet(z, j, b, kBits), i, a, kBits);
            PointPrecycle rhs = chowreg::facet(chowreg::facet(z, i, a, kBits), j - 1, b, kBits);
            CHECK(same_points(lhs, rhs));
          }
        }
      }
    }
  }
}

TEST_CASE("Weil product over boundaries of graphs") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> root(-6, 6);
  RationalFunction t = RationalFunction::t(1);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    RationalFunction g = constant(q(root(rng) == 0 ? 3 : 2));
    for (int k = 0; k < 4; ++k) {
      int r = root(rng);
      g = k % 2 ? g / (t - constant(q(r))) : g * (t - constant(q(r)));
    }
    if (g.is_constant() || (g - constant(q(1))).is_zero()) continue;
    Precycle w = chowreg::make_precycle(2, {CurveComponent{{t, g}, 1}});
    if (!chowreg::check_face_proper(w, kBits).ok) continue;
    PointPrecycle b = chowreg::boundary(w, kBits);
    CyclotomicNumber prod = q(1);
    for (const auto& c : b.components) prod = prod * c.coords[0].exact().pow(c.mult);
    CHECK(prod.is_one());
    ++checked;
  }
  CHECK(checked > 10);
  PointPrecycle b = chowreg::boundary(chowreg::fixture("graph_4_2").curve, kBits);
  CyclotomicNumber prod = q(1);
  for (const auto& c : b.components) prod = prod * c.coords[0].exact().pow(c.mult);
  CHECK(prod.is_one());
}

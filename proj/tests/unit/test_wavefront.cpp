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
#include <sstream>

#include "chowreg/cycle_file.hpp"
#include "chowreg/error.hpp"
#include "chowreg/fixtures.hpp"
#include "chowreg/wavefront.hpp"
#include "doctest.h"

using namespace chowreg;

namespace {

constexpr long kBits = 128;

RationalFunction rf(const std::string& s, int order = 1) { return parse_expression(s, order); }

Precycle curve(int n, const std::vector<std::string>& coords, int order = 1) {
  CurveComponent c;
  for (const auto& e : coords) c.coords.push_back(rf(e, order));
  c.mult = 1;
  return make_precycle(n, {c});
}

bool near(const Complex& a, const Complex& b, double tol) { return abs(a - b) < Real(tol); }

}  // namespace

TEST_CASE("phase schedule examples") {
  WorkingPrecision wp(256);
  auto s = make_schedule(Real(0.5), 3, Real(0.5));
  REQUIRE(s.n() == 3);
  CHECK(s.strict);
  CHECK(abs(s.phases[0] - Real(0.25)) < Real(1e-70));
  CHECK(abs(s.phases[1] - Real::from_string("0.0091578194443670901469")) < Real(1e-20));
  CHECK(abs(s.phases[2] / Real::from_string("1.8863376858138856641e-48") - Real(1L)) < Real(1e-18));
  CHECK(satisfies_nested_bound(s));

  CHECK(make_schedule(Real(0.5), 1, Real(0.5)).phases.size() == 1);
  CHECK_THROWS_AS(make_schedule(Real(0.5), 3, Real(1.5)), Error);
  CHECK_THROWS_AS(make_schedule(Real(-0.5), 3, Real(0.5)), Error);
}

TEST_CASE("schedule underflow at low precision") {
  WorkingPrecision wp(kBits);
  try {
    make_schedule(Real(0.5), 3, Real(0.5));
    FAIL("expected a schedule error");
  } catch (const Error& e) {
    CHECK(e.error_class() == ErrorClass::kSchedule);
  }
  auto r = relaxed_schedule(Real(0.5), 3, Real(0.5));
  CHECK_FALSE(r.strict);
  CHECK(r.phases[2] < r.phases[1]);
  CHECK(r.phases[1] < r.phases[0]);
}

TEST_CASE("equal-phase schedules are not nested") {
  WorkingPrecision wp(kBits);
  auto s = equal_phase_schedule(Real(0.2), 3);
  CHECK(s.equal_phase);
  CHECK_FALSE(satisfies_nested_bound(s));
  CHECK(s.phases[0] == s.phases[2]);
}

TEST_CASE("property: generated schedules satisfy the nested bound") {
  WorkingPrecision wp(512);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> bound(0.05, 1.0), lam(0.05, 0.95);
  int made = 0;
  for (int k = 0; k < 200; ++k) {
    int n = 1 + k % 3;
    try {
      auto s = make_schedule(Real(bound(rng)), n, Real(lam(rng)));
      CHECK(satisfies_nested_bound(s));
      ++made;
    } catch (const Error& e) {
      CHECK(e.error_class() == ErrorClass::kSchedule);
    }
  }
  CHECK(made > 100);
}

TEST_CASE("trace examples") {
  WorkingPrecision wp(kBits);
  SUBCASE("f = t is the negative real ray") {
    auto paths = trace_wavefront(rf("t"), 1, Real(0L));
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].pole_end.is_infinity());
    CHECK(paths[0].zero_end.to_string(10) == "0");
    for (const auto& smp : paths[0].samples()) {
      CHECK(near(smp.t, Complex(-exp(smp.s)), 1e-30 * (1 + exp(smp.s).to_double())));
    }
  }
  SUBCASE("f = 1 - 1/t at phase 0 is the segment (0, 1)") {
    auto paths = trace_wavefront(rf("1-1/t"), 1, Real(0L));
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].pole_end.to_string(10) == "0");
    CHECK(paths[0].zero_end.to_string(10) == "1");
    for (const auto& smp : paths[0].samples()) {
      CHECK(abs(smp.t.im) < Real(1e-30));
      CHECK(smp.t.re > Real(0L));
      CHECK(smp.t.re < Real(1L));
    }
  }
  SUBCASE("f = t^2 has two antipodal branches") {
    auto paths = trace_wavefront(rf("t^2"), 1, Real(0.3));
    REQUIRE(paths.size() == 2);
    Complex a = paths[0].locate(Real(0L));
    Complex b = paths[1].locate(Real(0L));
    CHECK(near(a, -b, 1e-30));
    CHECK(near(a * a, -Complex(cos(Real(-0.3)), sin(Real(-0.3))), 1e-30));
  }
  SUBCASE("constant coordinates cannot be traced") {
    CHECK_THROWS_AS(trace_wavefront(rf("3"), 1, Real(0.1)), Error);
  }
}

TEST_CASE("locate and refine") {
  WorkingPrecision wp(kBits);
  Real phase(0.2);
  auto paths = trace_wavefront(rf("t"), 1, phase);
  auto& p = paths[0];
  Complex dir = -Complex(cos(-phase), sin(-phase));
  for (double s : {0.0625, -3.3, 7.01}) {
    Complex d;
    Complex t = p.locate(Real(s), &d);
    CHECK(near(t, dir * exp(Real(s)), 1e-30 * std::exp(s)));
    CHECK(near(d, t, 1e-28 * std::exp(s)));
  }
  size_t before = p.samples().size();
  Real step = p.step();
  p.refine();
  CHECK(p.samples().size() == 2 * before - 1);
  CHECK(p.step() == step / Real(2L));
  CHECK_THROWS_AS(p.locate(p.s_max() + Real(1L)), Error);
}

TEST_CASE("property: traced samples stay on the locus") {
  WorkingPrecision wp(kBits);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5);
  int traced = 0;
  for (int k = 0; k < 12; ++k) {
    std::ostringstream e;
    e << "(t^2 + (" << coef(rng) << ")*t + (" << coef(rng) << "))/(t - (" << coef(rng) << "))";
    RationalFunction f = rf(e.str());
    if (f.is_constant()) continue;
    try {
      auto paths = trace_wavefront(f, 1, Real(0.137));
      CHECK(static_cast<int>(paths.size()) == f.degree());
      for (const auto& p : paths) {
        // arg f is ill-conditioned next to the endpoints; check the middle.
        for (size_t i = 0; i < p.samples().size(); i += 7) {
          if (abs(p.samples()[i].s) < Real(20L)) CHECK(p.arg_residual(i) < Real(1e-25));
        }
      }
      ++traced;
    } catch (const Error& err) {
      CHECK(err.error_class() == ErrorClass::kSchedule);
    }
  }
  CHECK(traced >= 8);
}

TEST_CASE("pair intersection count against a brute-force scan") {
  WorkingPrecision wp(kBits);
  Precycle z = curve(2, {"t", "(t-1)/(t+3)"});
  Real e1(0.1), e2(0.01);
  auto paths = trace_wavefront(z.components[0].coords[0], 1, e1);
  auto xs = find_pair_intersections(z.components[0], paths, 2, e2);
  REQUIRE(xs.size() == 1);
  CHECK(std::abs(xs[0].sign) == 1);
  CHECK(xs[0].t.re < Real(0L));
  CHECK(xs[0].t.re > Real(-3L));

  // Sign changes of Im(e^{i e2} f2) where Re(e^{i e2} f2) < 0.
  NumericRational f2(z.components[0].coords[1]);
  Complex rot(cos(e2), sin(e2));
  int changes = 0;
  Real prev_im;
  for (int k = 0; k <= 4000; ++k) {
    Real s(-8.0 + 16.0 * k / 4000.0);
    Complex v = rot * f2.value(paths[0].locate(s));
    if (k > 0 && v.re.sign() < 0 && v.im.sign() != prev_im.sign()) ++changes;
    prev_im = v.im;
  }
  CHECK(changes == 1);
}

TEST_CASE("equal-phase counterexample witness") {
  WorkingPrecision wp(kBits);
  Precycle z = fixture("mccarthy_counterexample").curve;
  for (double e : {0.05, 0.1, 0.2, 0.4}) {
    CAPTURE(e);
    auto rep = admissible(z, equal_phase_schedule(Real(e), 3));
    CHECK_FALSE(rep.ok);
    bool found = false;
    for (const auto& f : rep.failures) {
      if (f.kind == "triple" && f.witness) {
        found = found || abs(*f.witness - Complex(tan(Real(e)))) < Real(1e-6);
      }
    }
    CHECK(found);
  }
  SearchOptions so;
  AdmissibilityReport last;
  auto s = search_schedule(z, so, &last);
  CHECK(last.ok);
  CHECK_FALSE(s.equal_phase);
  CHECK(admissible(z, s).ok);
}

TEST_CASE("admissibility failures") {
  WorkingPrecision wp(kBits);
  SUBCASE("constant coordinate on its cut") {
    auto rep = admissible(curve(3, {"1-1/t", "-1", "t"}), relaxed_schedule(Real(0.2), 3, Real(0.5)));
    CHECK(rep.ok);  // -1 is off the perturbed cut
    auto rep0 = admissible(curve(3, {"1-1/t", "-1", "t"}), equal_phase_schedule(Real(0L), 3));
    CHECK_FALSE(rep0.ok);
    CHECK(rep0.failures.front().kind == "cut");
  }
  SUBCASE("schedule length mismatch") {
    CHECK_THROWS_AS(admissible(curve(3, {"1-1/t", "1-t", "1/t"}), equal_phase_schedule(Real(0.1), 2)),
                    Error);
  }
  SUBCASE("point level") {
    PointPrecycle z{1, 1, {PointComponent{{P1Point(CyclotomicNumber::integer(1, -1))}, 1}}};
    CHECK_FALSE(admissible(z, equal_phase_schedule(Real(0L), 1)).ok);
    CHECK(admissible(z, equal_phase_schedule(Real(0.1), 1)).ok);
  }
}

TEST_CASE("schedule search is deterministic") {
  WorkingPrecision wp(kBits);
  Precycle z = fixture("z1_totaro").curve;
  SearchOptions so;
  so.seed = 42;
  auto a = search_schedule(z, so);
  auto b = search_schedule(z, so);
  CHECK(a.to_string(30) == b.to_string(30));
}

TEST_CASE("csv exports") {
  WorkingPrecision wp(kBits);
  Precycle z = curve(2, {"t", "(t-1)/(t+3)"});
  auto paths = trace_wavefront(z.components[0].coords[0], 1, Real(0.1));
  std::ostringstream a, b;
  write_paths_csv(a, 0, paths, true);
  write_intersections_csv(b, 0, find_pair_intersections(z.components[0], paths, 2, Real(0.01)), true);
  std::string pa = a.str(), pb = b.str();
  CHECK(pa.rfind("format_version,component_id,coord_index,path_index,sample_index,re_t,im_t,r,arg_residual\n", 0) == 0);
  CHECK(pb.rfind("format_version,component_id,i,j,re_t,im_t,sign\n", 0) == 0);
  CHECK(std::count(pb.begin(), pb.end(), '\n') == 2);
  CHECK(static_cast<size_t>(std::count(pa.begin(), pa.end(), '\n')) == paths[0].samples().size() + 1);
}

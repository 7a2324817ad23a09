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

// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <sys/wait.h>

#include "chowreg/cycle_file.hpp"
#include "chowreg/error.hpp"
#include "chowreg/fixtures.hpp"
#include "chowreg/regulator.hpp"
#include "chowreg/special_functions.hpp"

using namespace chowreg;

namespace {

constexpr long kBits = 256;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const Real& x, int digits = 3) { return x.to_string(digits); }

std::string fmt_s(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

Real pi_sq() { return Real::pi() * Real::pi(); }

// |a - b| reduced modulo (2 pi i)^p.
Real lattice_distance(const Complex& a, const Complex& b, int p) {
  return abs(canonical_representative(a - b, p));
}

RegulatorValue z1_value;
double z1_seconds = 0;
RegulatorValue petras_value;
double petras_seconds = 0;

Outcome criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  z1_value = regulator(fixture("z1_totaro").curve);
  z1_seconds = seconds_since(t0);
  Real err = lattice_distance(z1_value.value.mid, Complex(pi_sq() / Real(6L)), 2);
  bool ok = err < Real(1e-8) && z1_seconds < 30.0;
  return {ok, "value " + fmt(z1_value.value.mid.re, 15) + ", |value - pi^2/6| = " + fmt(err) +
                  " (tol 1e-8), " + fmt_s(z1_seconds) + " (limit 30 s)"};
}

Outcome torsion_check(const RegulatorValue& v, long order, const Rational& q) {
  TorsionResult t = torsion_order(v, 200, Real(1e-8));
  bool ok = t.order && *t.order == order && t.certificate == q;
  std::string got = t.order ? std::to_string(*t.order) + " with q = " + t.certificate.get_str()
                            : std::string("none");
  return {ok, "order " + got + " (expected " + std::to_string(order) + ", q = " + q.get_str() + ")"};
}

Outcome criterion2() { return torsion_check(z1_value, 24, Rational(-1, 24)); }

Outcome criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  petras_value = regulator(fixture("petras_zeta5").curve);
  petras_seconds = seconds_since(t0);
  Real err = lattice_distance(petras_value.value.mid, Complex(Real(7L) * pi_sq() / Real(30L)), 2);
  Outcome tor = torsion_check(petras_value, 120, Rational(-7, 120));
  bool ok = err < Real(1e-8) && tor.pass && petras_seconds < 120.0;
  return {ok, "value " + fmt(petras_value.value.mid.re, 15) + ", |value - 7 pi^2/30| = " + fmt(err) +
                  ", torsion " + tor.detail + ", " + fmt_s(petras_seconds) + " (limit 120 s)"};
}

Outcome criterion4() {
  Precycle z = fixture("mccarthy_counterexample").curve;
  std::string detail;
  bool ok = true;
  for (double e : {0.05, 0.1, 0.2, 0.4}) {
    AdmissibilityReport rep = admissible(z, equal_phase_schedule(Real(e), 3));
    Real best(1L);
    for (const auto& f : rep.failures) {
      if (f.witness) best = min(best, abs(*f.witness - Complex(tan(Real(e)))));
    }
    bool this_ok = !rep.ok && best < Real(1e-6);
    ok = ok && this_ok;
    std::ostringstream os;
    os << "eps " << e << ": " << (rep.ok ? "admissible" : "fails") << ", |t - tan eps| = " << fmt(best)
       << "; ";
    detail += os.str();
  }
  AdmissibilityReport last;
  PhaseSchedule s = search_schedule(z, SearchOptions{}, &last);
  bool distinct = s.phases[0] != s.phases[1] && s.phases[1] != s.phases[2];
  ok = ok && last.ok && distinct && admissible(z, s).ok;
  detail += "distinct schedule " + s.to_string(4) + (last.ok ? " admissible" : " not admissible");
  return {ok, detail};
}

Outcome criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  for (const char* name : {"z1_totaro", "petras_zeta5"}) {
    Precycle z = fixture(name).curve;
    std::vector<PhaseSchedule> schedules;
    for (int k = 0; k < 3; ++k) {
      SearchOptions so;
      so.seed = 100 + k;
      so.eps_start = Real(0.5) / Real(static_cast<long>(1 + 2 * k));
      schedules.push_back(search_schedule(z, so));
    }
    PhaseIndependenceReport rep = phase_independence_check(z, schedules);
    bool distinct = schedules[0].phases != schedules[1].phases &&
                    schedules[1].phases != schedules[2].phases &&
                    schedules[0].phases != schedules[2].phases;
    bool this_ok = distinct && rep.max_deviation < Real(1e-6);
    ok = ok && this_ok;
    detail += std::string(name) + ": max deviation " + fmt(rep.max_deviation) + " over " +
              schedules[0].to_string(3) + ", " + schedules[1].to_string(3) + ", " +
              schedules[2].to_string(3) + "; ";
  }
  double secs = seconds_since(t0);
  ok = ok && secs < 300.0;
  return {ok, detail + fmt_s(secs) + " (limit 300 s)"};
}

Outcome criterion6() {
  Precycle z = fixture("z1_totaro").curve;
  const Complex target(pi_sq() / Real(6L));
  std::vector<Real> errs, rads;
  std::string detail;
  bool ok = true;
  for (double b : {0.3, 0.1, 0.03}) {
    SearchOptions so;
    so.eps_start = Real(b);
    so.attempts = 1;
    PhaseSchedule s = search_schedule(z, so);
    RegulatorValue v = reg_n3(z, s);
    errs.push_back(lattice_distance(v.value.mid, target, 2));
    rads.push_back(Real(v.value.rad));
    std::ostringstream os;
    os << "bound " << b << ": error " << fmt(errs.back()) << "; ";
    detail += os.str();
    ok = ok && errs.back() < Real(1e-6);
  }
  // Non-increasing up to the reported error bounds.
  for (size_t k = 1; k < errs.size(); ++k) {
    ok = ok && errs[k] <= errs[k - 1] + rads[k] + rads[k - 1];
  }
  return {ok, detail + "monotone within error bounds"};
}

Outcome criterion7() {
  std::string detail;
  bool ok = true;
  auto check_line = [&](const std::string& label, const RegulatorTerm& t, const Complex& oracle) {
    Real diff = abs(t.value - oracle);
    bool this_ok = diff <= Real(10L) * t.error;
    ok = ok && this_ok;
    detail += label + " |L - oracle| = " + fmt(diff) + " vs 10 x err " +
              fmt(Real(10L) * t.error) + "; ";
  };
  auto li2_of = [](const Complex& z) { return li2(ComplexApprox{z, 0.0}).mid; };
  {
    Precycle z = fixture("z1_totaro").curve;
    RegulatorValue v = evaluate_currents(z, search_schedule(z, SearchOptions{}));
    check_line("Z1 vs Li2(1):", v.breakdown.at(0), li2_of(Complex(1L)));
  }
  {
    Precycle z = fixture("z_minus1").curve;
    RegulatorValue v = evaluate_currents(z, search_schedule(z, SearchOptions{}));
    check_line("Z_-1 vs Li2(-1):", v.breakdown.at(0), li2_of(Complex(-1L)));
  }
  {
    Precycle z = fixture("petras_zeta5").curve;
    RegulatorValue v = evaluate_currents(z, search_schedule(z, SearchOptions{}));
    for (const auto& t : v.breakdown) {
      if (t.kind != TermKind::kLine) {
        ok = false;
        continue;
      }
      const CurveComponent& c = z.components[t.component];
      Complex a = -embed(c.coords[0].num().coeff(0)).mid;
      long m = c.coords[2].den().degree() * c.mult;
      check_line("Petras component " + std::to_string(t.component) + " vs " + std::to_string(m) +
                     " Li2(a):",
                 t, li2_of(a) * Real(m));
    }
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

// ---- criterion 8: structural properties ----

RationalFunction lin(const CyclotomicNumber& a) {
  return RationalFunction::t(a.order()) - RationalFunction::constant(a);
}

CyclotomicNumber q(long a, long b = 1) { return CyclotomicNumber::rational(1, Rational(a, b)); }

bool same_points(const PointPrecycle& a, const PointPrecycle& b) {
  PointPrecycle d = a;
  for (auto c : b.components) {
    c.mult = -c.mult;
    d.components.push_back(c);
  }
  return reduce(d, kBits).empty();
}

PointPrecycle point_boundary(const PointPrecycle& z) {
  PointPrecycle out{z.n - 1, z.order, {}};
  for (int i = 1; i <= z.n; ++i) {
    long sign = i % 2 ? -1 : 1;
    for (bool inf : {false, true}) {
      for (auto c : facet(z, i, inf, kBits).components) {
        c.mult *= inf ? -sign : sign;
        out.components.push_back(c);
      }
    }
  }
  return reduce(out, kBits);
}

Outcome criterion8() {
  std::mt19937 rng(2026);
  std::string detail;
  bool ok = true;
  auto note = [&](const std::string& name, bool pass, int count) {
    ok = ok && pass;
    detail += name + (pass ? " ok" : " FAILED") + " (" + std::to_string(count) + "); ";
  };

  {  // d o d: two-step facet identity and vanishing of the boundary of the boundary.
    const long pool[] = {0, 2, -3, 5, -7};
    std::uniform_int_distribution<int> pick(0, 4), cdist(2, 6);
    bool pass = true;
    int count = 0;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<RationalFunction> coords;
      for (int k = 0; k < 3; ++k) {
        int a = pick(rng), b = pick(rng);
        while (b == a) b = pick(rng);
        coords.push_back(RationalFunction::constant(q(cdist(rng))) * lin(q(pool[a])) / lin(q(pool[b])));
      }
      Precycle z = make_precycle(3, {CurveComponent{coords, 1}});
      for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) {
          for (bool a : {false, true}) {
            for (bool b : {false, true}) {
              pass = pass && same_points(facet(facet(z, j, b, kBits), i, a, kBits),
                                         facet(facet(z, i, a, kBits), j - 1, b, kBits));
              ++count;
            }
          }
        }
      }
      if (check_face_proper(z, kBits).ok) {
        try {
          pass = pass && point_boundary(boundary(z, kBits)).empty();
          ++count;
        } catch (const Error&) {
          // A facet point on a deeper face: not a proper precycle.
        }
      }
    }
    note("boundary of boundary", pass, count);
  }

  {  // divisor degree zero
    std::uniform_int_distribution<int> cf(-4, 4), deg(0, 3);
    const int orders[] = {1, 3, 4, 5};
    bool pass = true;
    int count = 0;
    for (int k = 0; k < 100; ++k) {
      int order = orders[k % 4];
      auto poly = [&]() {
        std::vector<CyclotomicNumber> c;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) {
          std::vector<Rational> co;
          for (int j = 0; j < euler_phi(order); ++j) co.push_back(Rational(cf(rng)));
          c.push_back(CyclotomicNumber(order, co));
        }
        return Poly(order, c);
      };
      Poly n = poly(), d = poly();
      if (n.is_zero() || d.is_zero()) continue;
      RationalFunction f(n, d);
      long total = 0;
      for (const auto& p : divisor(f, kBits)) total += p.multiplicity;
      pass = pass && total == 0;
      ++count;
    }
    note("divisor degree zero", pass && count >= 80, count);
  }

  {  // Weil-type product over graph boundaries
    std::uniform_int_distribution<int> root(-6, 6);
    RationalFunction t = RationalFunction::t(1);
    bool pass = true;
    int count = 0;
    auto product_is_one = [](const PointPrecycle& b) {
      CyclotomicNumber prod = q(1);
      for (const auto& c : b.components) prod = prod * c.coords[0].exact().pow(c.mult);
      return prod.is_one();
    };
    pass = product_is_one(boundary(fixture("graph_4_2").curve, kBits));
    for (int trial = 0; trial < 40; ++trial) {
      RationalFunction g = RationalFunction::constant(q(2));
      for (int k = 0; k < 4; ++k) {
        RationalFunction l = lin(q(root(rng)));
        g = k % 2 ? g / l : g * l;
      }
      if (g.is_constant()) continue;
      Precycle w = make_precycle(2, {CurveComponent{{t, g}, 1}});
      if (!check_face_proper(w, kBits).ok) continue;
      pass = pass && product_is_one(boundary(w, kBits));
      ++count;
    }
    note("Weil product", pass && count > 10, count + 1);
  }

  {  // normalize: profile and idempotence
    std::uniform_int_distribution<int> root(-9, 9), kdist(1, 2);
    RationalFunction t = RationalFunction::t(1);
    bool pass = true;
    int count = 0;
    for (int trial = 0; trial < 10; ++trial) {
      int k = kdist(rng);
      RationalFunction v = RationalFunction::constant(q(1));
      std::vector<int> used;
      while (static_cast<int>(used.size()) < k) {
        int r = root(rng);
        CyclotomicNumber x = q(r, 3);
        if (r == 0 || x.pow(k).is_one()) continue;
        if (std::find(used.begin(), used.end(), r) != used.end()) continue;
        used.push_back(r);
        v = v * lin(x);
      }
      Precycle z = make_precycle(2, {CurveComponent{{(t.pow(k) - RationalFunction::constant(q(1))) / v,
                                                     t.pow(-k)}, 1}});
      Precycle n1 = normalize(z, kBits);
      Precycle n2 = normalize(n1, kBits);
      pass = pass && face_vanishing_profile(n1, kBits).normalized();
      pass = pass && n1.components.size() == n2.components.size();
      for (size_t c = 0; pass && c < n1.components.size(); ++c) {
        pass = n1.components[c].to_string() == n2.components[c].to_string() &&
               n1.components[c].mult == n2.components[c].mult;
      }
      ++count;
    }
    note("normalize", pass, count);
  }

  {  // Li2 reflection and inversion
    WorkingPrecision wp(128);
    std::uniform_real_distribution<double> u(-1.0, 1.0), w(-6.0, 6.0);
    bool pass = true;
    int refl = 0, inv = 0;
    const Real pi = Real::pi();
    while (refl < 100) {
      Complex z(Real(u(rng)), Real(u(rng)));
      if (abs(z) >= Real(0.98) || z.im.is_zero()) continue;
      ++refl;
      auto a = li2(ComplexApprox(z));
      auto b = li2(ComplexApprox(Complex(1L) - z));
      Complex rhs = Complex(pi * pi / Real(6L)) - log(z) * log(Complex(1L) - z);
      pass = pass && abs(a.mid + b.mid - rhs) <= Real(a.rad + b.rad + 1e-30);
    }
    while (inv < 100) {
      Complex z(Real(w(rng)), Real(w(rng)));
      if (abs(z) <= Real(1.02) || abs(z.im) < Real(1e-3)) continue;
      ++inv;
      auto a = li2(ComplexApprox(z));
      auto b = li2(ComplexApprox(Complex(1L) / z));
      Complex l = log(-z);
      Complex rhs = Complex(-(pi * pi) / Real(6L)) - l * l / Real(2L);
      pass = pass && abs(a.mid + b.mid - rhs) <= Real(a.rad + b.rad + 1e-30);
    }
    note("Li2 reflection and inversion", pass, refl + inv);
  }

  {  // schedule generator
    WorkingPrecision wp(512);
    std::uniform_real_distribution<double> bound(0.05, 1.0), lam(0.05, 0.95);
    bool pass = true;
    int made = 0;
    for (int k = 0; k < 200; ++k) {
      try {
        pass = pass && satisfies_nested_bound(make_schedule(Real(bound(rng)), 1 + k % 3, Real(lam(rng))));
        ++made;
      } catch (const Error& e) {
        pass = pass && e.error_class() == ErrorClass::kSchedule;
      }
    }
    note("nested schedules", pass && made > 100, made);
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

Outcome criterion9(const std::string& cli) {
  if (cli.empty()) return {false, "command-line binary not given"};
  std::string a = "acceptance_run_a.json", b = "acceptance_run_b.json";
  std::string cmd = "\"" + cli + "\" torsion --fixture all --seed 7 > ";
  // z_minus1 is not closed, so the run exits 1 with a per-cycle error.
  int ra = WEXITSTATUS(std::system((cmd + a).c_str()));
  int rb = WEXITSTATUS(std::system((cmd + b).c_str()));
  auto slurp = [](const std::string& f) {
    std::ifstream in(f, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  std::string ja = slurp(a), jb = slurp(b);
  std::remove(a.c_str());
  std::remove(b.c_str());
  bool ok = ra == rb && !ja.empty() && ja == jb;
  return {ok, std::to_string(ja.size()) + " bytes per report, " +
                  (ja == jb ? "bit-identical" : "reports differ") + ", exit statuses " +
                  std::to_string(ra) + "/" + std::to_string(rb)};
}

}  // namespace

int main(int argc, char** argv) {
  WorkingPrecision wp(kBits);
  std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Totaro value", criterion1},
      {"Totaro torsion", criterion2},
      {"Petras value and torsion", criterion3},
      {"equal-phase counterexample", criterion4},
      {"phase independence", criterion5},
      {"small-phase agreement", criterion6},
      {"dilogarithm oracle equivalence", criterion7},
      {"structural properties", criterion8},
      {"determinism", [&] { return criterion9(cli); }},
  };
  int failed = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << (k + 1) << " [" << (o.pass ? "PASS" : "FAIL") << "] "
              << criteria[k].first << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

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

#include "chowreg/regulator.hpp"

#include <algorithm>
#include <cmath>

#include "chowreg/error.hpp"
#include "chowreg/special_functions.hpp"

namespace chowreg {

namespace {

Complex unit(const Real& angle) { return Complex(cos(angle), sin(angle)); }

Complex two_pi_i() { return Complex(Real(0L), Real(2L) * Real::pi()); }

std::string first_failure(const AdmissibilityReport& rep) {
  if (rep.failures.empty()) return "";
  const auto& f = rep.failures.front();
  return "component " + std::to_string(f.component) + ", " + f.kind + ": " + f.detail;
}

// log^phase(v) where v is known to lie on one side of a cut crossing; the
// computed argument is overridden when it lands on the wrong side.
Complex log_with_side(const Complex& v, const Real& phase, int expected_side) {
  Real theta = arg(unit(phase) * v);
  const Real pi = Real::pi();
  if (expected_side != 0 && abs(theta) > pi / Real(2L) && theta.sign() != expected_side) {
    theta = theta + Real(2L * expected_side) * pi;
  }
  return Complex(log(abs(v)), theta - phase);
}

}  // namespace

const char* term_kind_name(TermKind k) {
  switch (k) {
    case TermKind::kPoint:
      return "point";
    case TermKind::kLine:
      return "line";
    case TermKind::kIntersection:
      return "intersection";
  }
  return "?";
}

Complex lattice_generator(int p) { return pow(two_pi_i(), p); }

Complex canonical_representative(const Complex& v, int p, long* multiple) {
  Complex g = lattice_generator(p);
  Real q = (v / g).re;
  Real k = floor(q + Real(0.5));
  if (multiple) *multiple = static_cast<long>(k.to_double());
  return v - g * k;
}

RegulatorValue reg_n1(const PointPrecycle& z, const Real& phase) {
  if (z.n != 1) fail(ErrorClass::kDomain, "reg_n1 needs a point cycle in the 1-cube");
  const long bits = WorkingPrecision::bits();
  RegulatorValue out;
  out.p = 1;
  out.lattice_power = 1;
  out.schedule_used = equal_phase_schedule(phase, 1);
  out.schedule_used.equal_phase = false;
  Complex sum(0L);
  Real err(0L);
  for (size_t ci = 0; ci < z.components.size(); ++ci) {
    const auto& c = z.components[ci];
    if (c.coords[0].is_infinity()) fail(ErrorClass::kDomain, "point coordinate is infinite");
    ComplexApprox x = c.coords[0].numeric(bits);
    if (x.contains_zero()) fail(ErrorClass::kDomain, "point coordinate is 0");
    ComplexApprox l;
    try {
      l = log_eps(x, BranchSpec{phase});
    } catch (const Error&) {
      fail(ErrorClass::kPrecision, "point " + c.coords[0].to_string(10) +
                                       " lies on the cut of log at phase " + phase.to_string(6) +
                                       "; choose a different phase");
    }
    RegulatorTerm term;
    term.component = ci;
    term.mult = c.mult;
    term.kind = TermKind::kPoint;
    term.value = l.mid * Real(c.mult);
    term.error = Real(l.rad * static_cast<double>(std::labs(c.mult)));
    sum += term.value;
    err += term.error;
    out.breakdown.push_back(std::move(term));
  }
  out.value = ComplexApprox{sum, (err + ldexp(abs(sum), 4 - bits)).to_double()};
  out.quadrature_error = Real(0L);
  return out;
}

long intersection_number_n2(const Precycle& z, const PhaseSchedule& s, const TraceOptions& opts) {
  if (z.n != 2) fail(ErrorClass::kDomain, "intersection_number_n2 needs a curve in the 2-cube");
  if (s.n() != 2) fail(ErrorClass::kDomain, "schedule must have two phases");
  AdmissibilityReport rep = admissible(z, s, opts);
  if (!rep.ok) fail(ErrorClass::kSchedule, "schedule not admissible: " + first_failure(rep));
  long count = 0;
  for (const auto& c : z.components) {
    if (c.coords[0].is_constant()) continue;
    auto paths = trace_wavefront(c.coords[0], 1, s.phases[0], opts);
    for (const auto& x : find_pair_intersections(c, paths, 2, s.phases[1])) count += c.mult * x.sign;
  }
  return count;
}

RegulatorValue evaluate_currents(const Precycle& z, const PhaseSchedule& s,
                                 const RegulatorOptions& opts) {
  if (z.n != 3) fail(ErrorClass::kDomain, "regulator currents are implemented for n = 3 curves");
  if (s.n() != 3) fail(ErrorClass::kDomain, "schedule must have three phases");
  const long bits = WorkingPrecision::bits();
  AdmissibilityReport rep = admissible(z, s, opts.search.trace);
  if (!rep.ok) fail(ErrorClass::kSchedule, "schedule not admissible: " + first_failure(rep));

  const Real& e2 = s.phases[1];
  const Real& e3 = s.phases[2];
  RegulatorValue out;
  out.p = 2;
  out.lattice_power = 2;
  out.schedule_used = s;
  Complex sum(0L);
  Real err(0L);
  Real quad_err(0L);
  const Real near = ldexp(Real(1L), -bits / 3);

  for (size_t ci = 0; ci < z.components.size(); ++ci) {
    const CurveComponent& c = z.components[ci];
    // T_1 is empty for a constant first coordinate off its cut.
    if (c.coords[0].is_constant()) continue;
    auto paths = trace_wavefront(c.coords[0], 1, s.phases[0], opts.search.trace);
    std::vector<WavefrontIntersection> xs;
    if (!c.coords[1].is_constant()) xs = find_pair_intersections(c, paths, 2, e2);
    NumericRational f2(c.coords[1]);
    NumericRational f3(c.coords[2]);
    const bool f3_constant = c.coords[2].is_constant();
    const Real m(c.mult);

    for (size_t pi = 0; pi < paths.size(); ++pi) {
      const TracedPath& path = paths[pi];
      std::vector<const WavefrontIntersection*> here;
      for (const auto& x : xs) {
        if (x.path_index == pi) here.push_back(&x);
      }
      std::sort(here.begin(), here.end(),
                [](const auto* a, const auto* b) { return a->s < b->s; });

      if (!f3_constant) {
        // Oriented pole -> zero, i.e. towards decreasing s.
        LineIntegrand g = [&](const Real& sv, size_t) {
          Complex dtds;
          Complex t = path.locate(sv, &dtds);
          int side = 0;
          for (const auto* x : here) {
            if (abs(sv - x->s) < near) side = sv < x->s ? x->sign : -x->sign;
          }
          Complex l2 = log_with_side(f2.value(t), e2, side);
          return -(l2 * f3.dlog(t) * dtds);
        };
        std::vector<Real> cuts;
        for (const auto* x : here) cuts.push_back(x->s);
        QuadratureResult q =
            integrate_line(g, path.s_min(), path.s_max(), true, true, cuts, opts.quadrature);
        RegulatorTerm term;
        term.component = ci;
        term.mult = c.mult;
        term.kind = TermKind::kLine;
        term.value = q.value * m;
        term.error = q.error * abs(m);
        term.path = pi;
        sum += term.value;
        err += term.error;
        quad_err += term.error;
        out.breakdown.push_back(std::move(term));
      }

      for (const auto* x : here) {
        Complex v3 = f3.value(x->t);
        Complex l3 = log_eps(v3, e3);
        RegulatorTerm term;
        term.component = ci;
        term.mult = c.mult;
        term.kind = TermKind::kIntersection;
        term.value = two_pi_i() * l3 * Real(static_cast<long>(x->sign)) * m;
        // Crossing located to about 0.45 * bits.
        term.error = abs(term.value) * ldexp(Real(1L), static_cast<long>(-0.4 * bits)) +
                     ldexp(abs(m), static_cast<long>(-0.4 * bits));
        term.path = pi;
        term.t = x->t;
        term.sign = x->sign;
        sum += term.value;
        err += term.error;
        out.breakdown.push_back(std::move(term));
      }
    }
  }
  err += ldexp(abs(sum) + Real(1L), 8 - bits);
  out.value = ComplexApprox{sum, err.to_double()};
  out.quadrature_error = quad_err;
  return out;
}

RegulatorValue reg_n3(const Precycle& z, const PhaseSchedule& s, const RegulatorOptions& opts) {
  const long bits = WorkingPrecision::bits();
  if (!is_closed(z, bits)) fail(ErrorClass::kDomain, "reg_n3 requires a closed cycle");
  if (!face_vanishing_profile(z, bits).normalized()) {
    fail(ErrorClass::kDomain, "reg_n3 requires a normalized cycle");
  }
  return evaluate_currents(z, s, opts);
}

PhaseIndependenceReport compare_values(const std::vector<RegulatorValue>& values) {
  PhaseIndependenceReport rep;
  rep.max_deviation = Real(0L);
  if (values.empty()) return rep;
  const long bits = WorkingPrecision::bits();
  const int p = values.front().p;
  Complex g = lattice_generator(p);
  for (const auto& v : values) {
    rep.schedules.push_back(v.schedule_used);
    rep.values.push_back(v.value.mid);
    rep.errors.push_back(Real(v.value.rad));
    Complex d = v.value.mid - values.front().value.mid;
    Real k = round((d / g).re);
    rep.lattice_multiples.push_back(static_cast<long>(k.to_double()));
    Real dev = abs(d - g * k);
    Real allowed = Real(10L) * (Real(v.value.rad) + Real(values.front().value.rad)) +
                   ldexp(Real(1L), -bits / 2);
    rep.max_deviation = max(rep.max_deviation, dev);
    if (dev > allowed) rep.ok = false;
  }
  return rep;
}

PhaseIndependenceReport phase_independence_check(const Precycle& z,
                                                 const std::vector<PhaseSchedule>& schedules,
                                                 const RegulatorOptions& opts) {
  std::vector<RegulatorValue> vals;
  for (const auto& s : schedules) vals.push_back(reg_n3(z, s, opts));
  return compare_values(vals);
}

RegulatorValue regulator(const Precycle& z_in, const RegulatorOptions& opts) {
  const long bits = WorkingPrecision::bits();
  if (z_in.n != 3) {
    fail(ErrorClass::kDomain, "regulator values are implemented for curves in the 3-cube (p = 2)");
  }
  if (z_in.empty()) {
    RegulatorValue out;
    out.p = 2;
    out.lattice_power = 2;
    out.value = ComplexApprox{Complex(0L), 0.0};
    out.quadrature_error = Real(0L);
    out.agreement = PhaseIndependenceReport{};
    out.agreement->max_deviation = Real(0L);
    return out;
  }
  if (!is_closed(z_in, bits)) fail(ErrorClass::kDomain, "regulator requires a closed cycle");
  Precycle z = drop_degenerate(z_in);
  if (!face_vanishing_profile(z, bits).normalized()) z = normalize(z, bits);

  std::vector<RegulatorValue> vals;
  PhaseSchedule first = search_schedule(z, opts.search);
  vals.push_back(reg_n3(z, first, opts));
  for (int k = 1; k <= opts.extra_schedules; ++k) {
    SearchOptions so = opts.search;
    so.eps_start = first.eps_bound * Real(std::pow(opts.shrink, k));
    so.seed = opts.search.seed + static_cast<std::uint64_t>(k);
    vals.push_back(reg_n3(z, search_schedule(z, so), opts));
  }
  PhaseIndependenceReport rep = compare_values(vals);
  if (!rep.ok) {
    fail(ErrorClass::kConvergence,
         "regulator values at different schedules disagree modulo the lattice by " +
             rep.max_deviation.to_string(3) + "; probable sign or transversality error");
  }
  RegulatorValue out = vals.back();
  out.agreement = rep;
  return out;
}

RegulatorValue regulator(const PointPrecycle& z, const RegulatorOptions& opts) {
  if (z.n != 1) fail(ErrorClass::kDomain, "point regulator values are implemented for n = 1");
  std::vector<RegulatorValue> vals;
  Real bound = opts.search.eps_start;
  for (int attempt = 0; attempt < opts.search.attempts && vals.size() < 3; ++attempt) {
    Real phase = bound / Real(2L);
    bound = bound * Real(opts.shrink);
    PhaseSchedule s = equal_phase_schedule(phase, 1);
    if (!admissible(z, s).ok) continue;
    vals.push_back(reg_n1(z, phase));
  }
  if (vals.empty()) fail(ErrorClass::kSchedule, "no admissible phase for the point cycle");
  PhaseIndependenceReport rep = compare_values(vals);
  if (!rep.ok) {
    fail(ErrorClass::kConvergence, "point regulator values disagree modulo the lattice");
  }
  RegulatorValue out = vals.back();
  out.agreement = rep;
  return out;
}

TorsionResult torsion_order(const RegulatorValue& v, long max_order, const Real& tol) {
  if (max_order < 1) fail(ErrorClass::kDomain, "max_order must be positive");
  Real err = Real(v.value.rad) + v.quadrature_error;
  if (!(err < tol / Real(2 * max_order))) {
    fail(ErrorClass::kPrecision, "value error " + err.to_string(3) +
                                     " too large for torsion detection; raise the precision");
  }
  TorsionResult out;
  Complex q = v.value.mid / lattice_generator(v.p);
  out.q = q;
  out.residual = abs(q.im);
  if (abs(q.im) >= tol) return out;

  // Continued-fraction convergents of Re q.
  Real x = q.re;
  Real a0 = floor(x);
  mpz_class h_prev = 1, h = mpz_class(static_cast<long>(a0.to_double()));
  mpz_class k_prev = 0, k = 1;
  Real rem = x - a0;
  for (int it = 0; it < 64; ++it) {
    if (k > max_order) break;
    Real approx = Real(mpq_class(h, k));
    Real resid = abs(x - approx);
    if (resid < tol / Real(mpq_class(k))) {
      long m = k.get_si();
      out.order = m;
      out.residual = max(abs(q.im), resid);
      // Canonical representative in [-1/2, 1/2).
      mpq_class c(h, k);
      c.canonicalize();
      mpz_class shift;
      mpq_class shifted = c + mpq_class(1, 2);
      mpz_fdiv_q(shift.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
      out.certificate = c - mpq_class(shift);
      return out;
    }
    if (rem.is_zero()) break;
    Real inv = Real(1L) / rem;
    Real a = floor(inv);
    rem = inv - a;
    mpz_class ai(static_cast<long>(a.to_double()));
    if (abs(a) > Real(1e15)) break;
    mpz_class hn = ai * h + h_prev;
    mpz_class kn = ai * k + k_prev;
    h_prev = h;
    h = hn;
    k_prev = k;
    k = kn;
  }
  return out;
}

Complex pulled_back_two_form(const CurveComponent& c, const Complex& t) {
  if (c.n() < 3) fail(ErrorClass::kDomain, "two-form needs three coordinates");
  Complex l1 = log(NumericRational(c.coords[0]).value(t));
  Complex a = NumericRational(c.coords[1]).dlog(t);
  Complex b = NumericRational(c.coords[2]).dlog(t);
  // a dt = a dx + i a dy, b dt = b dx + i b dy.
  Complex i = Complex::i();
  return l1 * (a * (i * b) - (i * a) * b);
}

}  // namespace chowreg

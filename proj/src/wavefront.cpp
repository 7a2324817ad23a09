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

#include "chowreg/wavefront.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "chowreg/error.hpp"
#include "chowreg/special_functions.hpp"

namespace chowreg {

namespace {

Real chordal_to(const Complex& t, const P1Point& p, long bits) {
  if (p.is_infinity()) return Real(1L) / sqrt(Real(1L) + norm(t));
  Complex a = p.numeric(bits).mid;
  return abs(t - a) / sqrt((Real(1L) + norm(t)) * (Real(1L) + norm(a)));
}

Real spherical_speed(const Complex& t, const Complex& dtds) {
  return abs(dtds) / (Real(1L) + norm(t));
}

Complex unit(const Real& angle) { return Complex(cos(angle), sin(angle)); }

// arg(-e^{i phase} v): zero exactly on the cut of log^phase.
Real cut_offset(const Complex& v, const Real& phase) { return arg(-(unit(phase) * v)); }

std::string short_real(const Real& x) { return x.to_string(8); }

std::string short_complex(const Complex& z) {
  return "(" + z.re.to_string(10) + ", " + z.im.to_string(10) + ")";
}

}  // namespace

std::string PhaseSchedule::to_string(int digits) const {
  std::string out = "(";
  for (size_t k = 0; k < phases.size(); ++k) out += (k ? ", " : "") + phases[k].to_string(digits);
  return out + ")";
}

PhaseSchedule make_schedule(const Real& eps_bound, int n, const Real& lambda) {
  if (eps_bound.sign() <= 0) fail(ErrorClass::kDomain, "schedule bound must be positive");
  if (n < 1) fail(ErrorClass::kDomain, "schedule length must be positive");
  if (lambda.sign() <= 0 || lambda >= Real(1L)) fail(ErrorClass::kDomain, "lambda must lie in (0, 1)");
  const long bits = WorkingPrecision::bits();
  const Real floor_value = ldexp(Real(1L), 16 - bits);
  PhaseSchedule s;
  s.eps_bound = eps_bound;
  Real e = lambda * eps_bound;
  s.phases.push_back(e);
  for (int k = 1; k < n; ++k) {
    e = lambda * exp(-(Real(1L) / e));
    if (e < floor_value) {
      fail(ErrorClass::kSchedule,
           "phase eps_" + std::to_string(k + 1) + " underflows at " + std::to_string(bits) +
               " bits (bound " + short_real(eps_bound) + ", lambda " + short_real(lambda) +
               "); use a larger lambda*eps, a higher precision or a relaxed schedule");
    }
    s.phases.push_back(e);
  }
  return s;
}

PhaseSchedule relaxed_schedule(const Real& eps_bound, int n, const Real& lambda) {
  if (eps_bound.sign() <= 0 || n < 1 || lambda.sign() <= 0 || lambda >= Real(1L)) {
    fail(ErrorClass::kDomain, "invalid relaxed schedule parameters");
  }
  PhaseSchedule s;
  s.eps_bound = eps_bound;
  s.strict = false;
  Real e = lambda * eps_bound;
  s.phases.push_back(e);
  for (int k = 1; k < n; ++k) {
    e = lambda * e * e;
    s.phases.push_back(e);
  }
  return s;
}

PhaseSchedule equal_phase_schedule(const Real& eps, int n) {
  if (eps.sign() < 0 || n < 1) fail(ErrorClass::kDomain, "invalid equal-phase schedule");
  PhaseSchedule s;
  s.eps_bound = eps;
  s.strict = false;
  s.equal_phase = true;
  s.phases.assign(n, eps);
  return s;
}

bool satisfies_nested_bound(const PhaseSchedule& s) {
  if (s.phases.empty()) return false;
  if (!(s.phases[0].sign() > 0 && s.phases[0] < s.eps_bound)) return false;
  for (size_t k = 1; k < s.phases.size(); ++k) {
    if (!(s.phases[k].sign() > 0 && s.phases[k] < exp(-(Real(1L) / s.phases[k - 1])))) return false;
  }
  return true;
}

Complex TracedPath::direction() const { return -unit(-phase); }

Complex TracedPath::velocity(const Complex& t) const {
  Complex dp, dq;
  Complex p = horner(p_, t, &dp);
  Complex q = horner(q_, t, &dq);
  return p * q / (dp * q - p * dq);
}

bool TracedPath::newton(const Real& s, Complex& t) const {
  const Complex w = direction() * exp(s);
  const Real tol = ldexp(Real(1L), 10 - bits_);
  for (int it = 0; it < 40; ++it) {
    Complex dp, dq;
    Complex p = horner(p_, t, &dp);
    Complex q = horner(q_, t, &dq);
    Complex g = p - w * q;
    Complex dg = dp - w * dq;
    if (dg.is_zero()) return false;
    Complex delta = g / dg;
    t -= delta;
    if (abs(delta) <= tol * max(Real(1L), abs(t))) return true;
  }
  return false;
}

bool TracedPath::step_to(const Real& s_from, const Complex& t_from, const Real& s_to,
                         Complex& t_to) const {
  // RK4 predictor on dt/ds = f / f', Newton corrector on P - w Q; halves the
  // step on failure.
  auto attempt = [&](const Real& a, const Complex& ta, const Real& b, Complex& tb) {
    Real h = b - a;
    Real h2 = h / Real(2L);
    Complex k1 = velocity(ta);
    Complex k2 = velocity(ta + k1 * h2);
    Complex k3 = velocity(ta + k2 * h2);
    Complex k4 = velocity(ta + k3 * h);
    Complex pred = ta + (k1 + k2 * Real(2L) + k3 * Real(2L) + k4) * (h / Real(6L));
    if (!pred.re.is_finite() || !pred.im.is_finite()) return false;
    tb = pred;
    if (!newton(b, tb)) return false;
    Real slack = ldexp(max(Real(1L), abs(tb)), -bits_ / 2);
    return abs(tb - pred) <= abs(pred - ta) * Real(0.1) + slack;
  };
  auto rec = [&](auto&& self, const Real& a, const Complex& ta, const Real& b, Complex& tb,
                 int depth) -> bool {
    if (attempt(a, ta, b, tb)) return true;
    if (depth >= 32) return false;
    Real m = (a + b) / Real(2L);
    Complex tm;
    return self(self, a, ta, m, tm, depth + 1) && self(self, m, tm, b, tb, depth + 1);
  };
  return rec(rec, s_from, t_from, s_to, t_to, 0);
}

Complex TracedPath::locate(const Real& s, Complex* dtds) const {
  if (s < s_min() || s > s_max()) fail(ErrorClass::kDomain, "locate: s outside the traced range");
  WorkingPrecision wp(bits_);
  Real rel = (s - s_min()) / step_;
  long k = std::min<long>(static_cast<long>(floor(rel).to_double()),
                          static_cast<long>(samples_.size()) - 2);
  k = std::max<long>(k, 0);
  const PathSample& a = samples_[k];
  const PathSample& b = samples_[k + 1];
  Real u = (s - a.s) / step_;
  Real u2 = u * u;
  Real u3 = u2 * u;
  Real h00 = Real(2L) * u3 - Real(3L) * u2 + Real(1L);
  Real h10 = u3 - Real(2L) * u2 + u;
  Real h01 = Real(3L) * u2 - Real(2L) * u3;
  Real h11 = u3 - u2;
  Complex t = a.t * h00 + a.dtds * (h10 * step_) + b.t * h01 + b.dtds * (h11 * step_);
  if (!newton(s, t)) {
    // Fall back to continuation from the left sample.
    if (!step_to(a.s, a.t, s, t)) {
      fail(ErrorClass::kConvergence, "locate failed at s = " + short_real(s));
    }
  }
  if (dtds) *dtds = velocity(t);
  return t;
}

void TracedPath::refine() {
  WorkingPrecision wp(bits_);
  std::vector<PathSample> out;
  out.reserve(2 * samples_.size());
  Real half = step_ / Real(2L);
  for (size_t k = 0; k + 1 < samples_.size(); ++k) {
    out.push_back(samples_[k]);
    Real s = samples_[k].s + half;
    Complex t = locate(s);
    out.push_back({s, t, velocity(t)});
  }
  out.push_back(samples_.back());
  samples_ = std::move(out);
  step_ = half;
}

Real TracedPath::arg_residual(size_t k) const {
  WorkingPrecision wp(bits_);
  Complex v = horner(p_, samples_[k].t) / horner(q_, samples_[k].t);
  return abs(cut_offset(v, phase));
}

std::vector<TracedPath> trace_wavefront(const RationalFunction& f, int coord_index,
                                        const Real& phase, const TraceOptions& opts) {
  if (f.is_constant()) fail(ErrorClass::kDomain, "cannot trace the cut of a constant coordinate");
  const long bits = WorkingPrecision::bits();
  TracedPath proto;
  proto.coord_index = coord_index;
  proto.phase = phase;
  proto.bits_ = bits;
  proto.step_ = Real(opts.step);
  for (const auto& c : f.num().coeffs()) proto.p_.push_back(embed(c, bits).mid);
  for (const auto& c : f.den().coeffs()) proto.q_.push_back(embed(c, bits).mid);
  const int d = f.degree();
  const Complex dir = proto.direction();

  // Seed all branches at one radius.
  const double seeds[] = {0.0, 0.3127, -0.4281, 0.7713, -1.1399, 1.5237, -2.0417, 2.6911};
  Real s0;
  std::vector<Complex> roots;
  for (double sd : seeds) {
    Real s(sd);
    Complex w = dir * exp(s);
    std::vector<Complex> g(d + 1, Complex(0L));
    for (size_t k = 0; k < proto.p_.size(); ++k) g[k] += proto.p_[k];
    for (size_t k = 0; k < proto.q_.size(); ++k) g[k] -= w * proto.q_[k];
    Real scale(0L);
    for (const auto& c : g) scale = max(scale, abs(c));
    if (abs(g[d]) <= ldexp(scale, -bits / 4)) continue;
    std::vector<Complex> r;
    try {
      r = polynomial_roots(g, bits);
    } catch (const Error&) {
      continue;
    }
    bool separated = true;
    for (size_t a = 0; a < r.size() && separated; ++a) {
      for (size_t b = a + 1; b < r.size() && separated; ++b) {
        separated = abs(r[a] - r[b]) > ldexp(Real(1L) + abs(r[a]), -bits / 8);
      }
    }
    if (!separated) continue;
    bool polished = true;
    for (auto& z : r) polished = polished && proto.newton(s, z);
    if (!polished) continue;
    s0 = s;
    roots = std::move(r);
    break;
  }
  if (roots.empty()) {
    fail(ErrorClass::kSchedule, "non-generic phase " + short_real(phase) +
                                    " for coordinate " + std::to_string(coord_index) +
                                    ": no clean seed radius");
  }

  const Real tau = ldexp(Real(1L), -opts.tail_bits);
  auto march = [&](Complex t, int dirn, std::vector<PathSample>& out) {
    Real s = s0;
    int quiet = 0;
    for (long count = 0;; ++count) {
      if (count > opts.max_samples) {
        fail(ErrorClass::kConvergence, "wavefront tracing exceeded the sample budget");
      }
      Real next = s + Real(static_cast<long>(dirn)) * proto.step_;
      Complex tn;
      if (!proto.step_to(s, t, next, tn)) {
        fail(ErrorClass::kSchedule, "non-generic phase " + short_real(phase) +
                                        " for coordinate " + std::to_string(coord_index) +
                                        ": branch collision near r = exp(" + short_real(next) +
                                        ")");
      }
      s = next;
      t = tn;
      Complex v = proto.velocity(t);
      out.push_back({s, t, v});
      quiet = spherical_speed(t, v) < tau ? quiet + 1 : 0;
      if (quiet >= 2) return;
    }
  };

  std::vector<DivisorPoint> div = divisor(f, bits);
  std::vector<TracedPath> paths;
  for (auto& r0 : roots) {
    TracedPath p = proto;
    std::vector<PathSample> up, down;
    march(r0, +1, up);
    march(r0, -1, down);
    std::reverse(down.begin(), down.end());
    p.samples_ = std::move(down);
    p.samples_.push_back({s0, r0, proto.velocity(r0)});
    p.samples_.insert(p.samples_.end(), up.begin(), up.end());

    auto nearest = [&](const Complex& t, bool pole) {
      const DivisorPoint* best = nullptr;
      Real best_d(10L);
      for (const auto& dp : div) {
        if ((dp.multiplicity < 0) != pole) continue;
        Real dd = chordal_to(t, dp.location, bits);
        if (!best || dd < best_d) {
          best = &dp;
          best_d = dd;
        }
      }
      if (!best || best_d > ldexp(Real(1L), -(3 * opts.tail_bits) / 4)) {
        fail(ErrorClass::kConvergence, std::string("wavefront endpoint did not reach a ") +
                                           (pole ? "pole" : "zero") + " of coordinate " +
                                           std::to_string(coord_index));
      }
      return best->location;
    };
    p.pole_end = nearest(p.samples_.back().t, true);
    p.zero_end = nearest(p.samples_.front().t, false);
    paths.push_back(std::move(p));
  }

  // Each pole and zero of order m must terminate exactly m branches.
  for (const auto& dp : div) {
    int hits = 0;
    for (const auto& p : paths) {
      const P1Point& e = dp.multiplicity < 0 ? p.pole_end : p.zero_end;
      hits += compare_points(e, dp.location, bits) == PointMatch::kSame;
    }
    if (hits != std::abs(dp.multiplicity)) {
      fail(ErrorClass::kSchedule, "non-generic phase " + short_real(phase) + " for coordinate " +
                                      std::to_string(coord_index) + ": " + std::to_string(hits) +
                                      " branches end at " + dp.location.to_string(10) +
                                      " of order " + std::to_string(std::abs(dp.multiplicity)));
    }
  }
  return paths;
}

std::vector<WavefrontIntersection> find_pair_intersections(const CurveComponent& c,
                                                           const std::vector<TracedPath>& paths,
                                                           int j, const Real& phase_j) {
  std::vector<WavefrontIntersection> out;
  if (paths.empty()) return out;
  const long bits = paths.front().precision();
  WorkingPrecision wp(bits);
  const RationalFunction& fj = c.coords[j - 1];
  const Real tol_angle = ldexp(Real(1L), -bits / 4);
  if (fj.is_constant()) {
    Complex v = embed(fj.constant_value(), bits).mid;
    if (distance_to_cut_angle(v, phase_j) < tol_angle) {
      fail(ErrorClass::kSchedule, "non-generic schedule: constant coordinate " +
                                      std::to_string(j) + " lies on its cut");
    }
    return out;
  }
  NumericRational g(fj);

  for (size_t pi = 0; pi < paths.size(); ++pi) {
    const TracedPath& path = paths[pi];
    auto offset_at = [&](const Real& s, const Complex& t) {
      (void)s;
      Complex v = g.value(t);
      if (v.is_zero() || !v.re.is_finite()) {
        fail(ErrorClass::kProperness, "coordinate " + std::to_string(j) +
                                          " hits 0 or infinity on a traced path");
      }
      return cut_offset(v, phase_j);
    };
    auto refine_crossing = [&](Real a, Real b, Real ha) {
      for (int it = 0; it < 40; ++it) {
        Real m = (a + b) / Real(2L);
        Real hm = offset_at(m, path.locate(m));
        if ((hm.sign() >= 0) == (ha.sign() >= 0)) {
          a = m;
          ha = hm;
        } else {
          b = m;
        }
      }
      Real s = (a + b) / Real(2L);
      const Real tol_s = ldexp(Real(1L), static_cast<long>(-0.45 * bits));
      for (int it = 0; it < 30; ++it) {
        Complex dtds;
        Complex t = path.locate(s, &dtds);
        Complex f, df;
        g.value_and_derivative(t, f, df);
        Real h = cut_offset(f, phase_j);
        Real dh = (df / f * dtds).im;
        if (dh.is_zero()) break;
        Real next = s - h / dh;
        if (next < a || next > b) break;
        bool done = abs(next - s) < tol_s;
        s = next;
        if (done) break;
      }
      return s;
    };

    std::vector<std::pair<Real, Real>> brackets;
    struct Interval {
      Real a, b;
      Complex ta, tb;
      int depth;
    };
    const auto& smp = path.samples();
    for (size_t k = 0; k + 1 < smp.size(); ++k) {
      std::vector<Interval> work{{smp[k].s, smp[k + 1].s, smp[k].t, smp[k + 1].t, 0}};
      while (!work.empty()) {
        Interval iv = work.back();
        work.pop_back();
        Real ha = offset_at(iv.a, iv.ta);
        Real hb = offset_at(iv.b, iv.tb);
        const Real third = Real::pi() / Real(3L);
        const Real half = Real::pi() / Real(2L);
        bool differ = (ha.sign() >= 0) != (hb.sign() >= 0);
        if (differ && abs(ha) + abs(hb) < half) {
          brackets.emplace_back(iv.a, iv.b);
          continue;
        }
        if (differ && abs(ha) > half && abs(hb) > half) continue;  // passes the positive axis
        if (!differ && abs(hb - ha) <= third) continue;
        if (iv.depth > 40) {
          fail(ErrorClass::kSchedule, "non-generic schedule: unresolved argument variation of "
                                      "coordinate " + std::to_string(j));
        }
        Real m = (iv.a + iv.b) / Real(2L);
        Complex tm = path.locate(m);
        work.push_back({m, iv.b, tm, iv.tb, iv.depth + 1});
        work.push_back({iv.a, m, iv.ta, tm, iv.depth + 1});
      }
    }
    for (const auto& [a, b] : brackets) {
      Real ha = offset_at(a, path.locate(a));
      Real s = refine_crossing(a, b, ha);
      Complex dtds;
      Complex t = path.locate(s, &dtds);
      Complex f, df;
      g.value_and_derivative(t, f, df);
      Real dh = (df / f * dtds).im;
      if (abs(dh) < tol_angle) {
        fail(ErrorClass::kSchedule, "non-generic schedule: tangential crossing of T_" +
                                        std::to_string(path.coord_index) + " and T_" +
                                        std::to_string(j) + " at t = " + short_complex(t));
      }
      WavefrontIntersection x;
      x.path_index = pi;
      x.i = path.coord_index;
      x.j = j;
      x.s = s;
      x.t = t;
      x.sign = dh.sign() > 0 ? 1 : -1;
      x.transversality = abs(dh).to_double();
      out.push_back(std::move(x));
    }
  }
  return out;
}

AdmissibilityReport admissible(const Precycle& z, const PhaseSchedule& sched,
                               const TraceOptions& opts) {
  AdmissibilityReport rep;
  if (sched.n() != z.n) {
    fail(ErrorClass::kDomain, "schedule has " + std::to_string(sched.n()) + " phases, cycle n = " +
                                  std::to_string(z.n));
  }
  const long bits = WorkingPrecision::bits();
  const Real tol_angle = ldexp(Real(1L), -bits / 4);
  auto failure = [&](size_t ci, const std::string& kind, const std::string& detail,
                     std::optional<Complex> w = std::nullopt) {
    rep.ok = false;
    rep.failures.push_back({ci, kind, detail, std::move(w)});
  };

  for (size_t ci = 0; ci < z.components.size(); ++ci) {
    const CurveComponent& c = z.components[ci];
    std::vector<TracedPath> first;
    bool traced = true;
    for (int i = 1; i <= z.n; ++i) {
      const RationalFunction& f = c.coords[i - 1];
      const Real& ph = sched.phases[i - 1];
      if (f.is_constant()) {
        Complex v = embed(f.constant_value(), bits).mid;
        if (distance_to_cut_angle(v, ph) < tol_angle) {
          failure(ci, "cut", "constant coordinate " + std::to_string(i) + " lies on its cut");
          if (i == 1) traced = false;
        }
        continue;
      }
      // Only T_1 is integrated over; the other loci are traced to check
      // genericity and need no deep tails.
      TraceOptions o = opts;
      if (i > 1) o.tail_bits = std::min<long>(opts.tail_bits, 24);
      try {
        auto paths = trace_wavefront(f, i, ph, o);
        if (i == 1) first = std::move(paths);
      } catch (const Error& e) {
        failure(ci, "trace", e.what());
        if (i == 1) traced = false;
      }
    }
    if (!traced || z.n < 2 || c.coords[0].is_constant()) continue;

    // Endpoints of T_1 must avoid the other cuts.
    for (const auto& p : first) {
      for (const P1Point* e : {&p.pole_end, &p.zero_end}) {
        for (int j = 2; j <= z.n; ++j) {
          P1Point v = eval(c.coords[j - 1], *e, bits);
          if (v.is_infinity()) continue;
          ComplexApprox b = v.numeric(bits);
          if (b.contains_zero()) continue;
          if (distance_to_cut_angle(b.mid, sched.phases[j - 1]) < tol_angle) {
            failure(ci, "endpoint",
                    "endpoint " + e->to_string(10) + " of T_1 lies on T_" + std::to_string(j));
          }
        }
      }
    }

    std::vector<WavefrontIntersection> xs;
    try {
      xs = find_pair_intersections(c, first, 2, sched.phases[1]);
    } catch (const Error& e) {
      failure(ci, "transversality", e.what());
      continue;
    }
    for (const auto& x : xs) {
      for (int k = 1; k <= z.n; ++k) {
        Complex v = NumericRational(c.coords[k - 1]).value(x.t);
        Real size = abs(v);
        if (size < tol_angle || size > Real(1L) / tol_angle) {
          failure(ci, "face",
                  "T_1 and T_2 meet where coordinate " + std::to_string(k) + " is 0 or infinite",
                  x.t);
        }
      }
      if (z.n >= 3) {
        Complex v3 = NumericRational(c.coords[2]).value(x.t);
        if (distance_to_cut_angle(v3, sched.phases[2]) < tol_angle) {
          failure(ci, "triple", "T_1, T_2 and T_3 meet at t = " + short_complex(x.t), x.t);
        }
      }
    }
  }
  return rep;
}

AdmissibilityReport admissible(const PointPrecycle& z, const PhaseSchedule& sched) {
  AdmissibilityReport rep;
  if (sched.n() != z.n) fail(ErrorClass::kDomain, "schedule length does not match the cycle");
  const long bits = WorkingPrecision::bits();
  const Real tol_angle = ldexp(Real(1L), -bits / 4);
  for (size_t ci = 0; ci < z.components.size(); ++ci) {
    const auto& c = z.components[ci];
    for (int i = 1; i <= z.n; ++i) {
      const P1Point& x = c.coords[i - 1];
      if (x.is_infinity()) {
        rep.ok = false;
        rep.failures.push_back({ci, "face", "coordinate " + std::to_string(i) + " is infinite", {}});
        continue;
      }
      ComplexApprox b = x.numeric(bits);
      if (b.contains_zero()) {
        rep.ok = false;
        rep.failures.push_back({ci, "face", "coordinate " + std::to_string(i) + " is 0", {}});
      } else if (distance_to_cut_angle(b.mid, sched.phases[i - 1]) < tol_angle) {
        rep.ok = false;
        rep.failures.push_back(
            {ci, "cut", "coordinate " + std::to_string(i) + " lies on its cut", b.mid});
      }
    }
  }
  return rep;
}

PhaseSchedule search_schedule(const Precycle& z, const SearchOptions& opts,
                              AdmissibilityReport* last_report) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> lam(0.3, 0.8);
  AdmissibilityReport last;
  Real bound = opts.eps_start;
  for (int a = 0; a < opts.attempts; ++a) {
    Real lambda = a == 0 ? Real(0.5) : Real(lam(rng));
    if (a > 0 && a % 2 == 0) bound = bound * Real(0.6);
    PhaseSchedule s;
    try {
      s = make_schedule(bound, z.n, lambda);
    } catch (const Error& e) {
      if (e.error_class() != ErrorClass::kSchedule) throw;
      s = relaxed_schedule(bound, z.n, lambda);
    }
    last = admissible(z, s, opts.trace);
    if (last.ok) {
      if (last_report) *last_report = last;
      return s;
    }
  }
  if (last_report) *last_report = last;
  std::string why = last.failures.empty() ? "" : ": " + last.failures.front().kind + " (" +
                                                     last.failures.front().detail + ")";
  fail(ErrorClass::kSchedule, "no admissible schedule after " + std::to_string(opts.attempts) +
                                  " attempts" + why);
}

void write_paths_csv(std::ostream& os, size_t component_id, const std::vector<TracedPath>& paths,
                     bool header) {
  if (header) os << "format_version,component_id,coord_index,path_index,sample_index,re_t,im_t,r,arg_residual\n";
  for (size_t pi = 0; pi < paths.size(); ++pi) {
    const auto& p = paths[pi];
    WorkingPrecision wp(p.precision());
    for (size_t k = 0; k < p.samples().size(); ++k) {
      const auto& smp = p.samples()[k];
      os << 1 << ',' << component_id << ',' << p.coord_index << ',' << pi << ',' << k << ','
         << smp.t.re.to_string(17) << ',' << smp.t.im.to_string(17) << ','
         << exp(smp.s).to_string(17) << ',' << p.arg_residual(k).to_string(3) << '\n';
    }
  }
}

void write_intersections_csv(std::ostream& os, size_t component_id,
                             const std::vector<WavefrontIntersection>& xs, bool header) {
  if (header) os << "format_version,component_id,i,j,re_t,im_t,sign\n";
  for (const auto& x : xs) {
    os << 1 << ',' << component_id << ',' << x.i << ',' << x.j << ',' << x.t.re.to_string(17) << ','
       << x.t.im.to_string(17) << ',' << x.sign << '\n';
  }
}

}  // namespace chowreg

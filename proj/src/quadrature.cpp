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

#include "chowreg/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "chowreg/error.hpp"

namespace chowreg {

namespace {

enum class RuleKind { kTanhSinh, kExpLeft, kExpRight };

// One piece [a, b]. kExpLeft integrates towards -inf from b (nodes below
// `edge` are dropped), kExpRight towards +inf from a.
struct Piece {
  RuleKind kind;
  Real a, b;
  Real edge;
  size_t index;
};

struct Node {
  Real s;
  Real w;
};

// Node of the rule at parameter u; false when the weight underflows or the
// node falls outside the integration range.
bool node(const Piece& p, const Real& u, long bits, Node& out) {
  const Real half_pi = Real::pi() / Real(2L);
  Real eu = exp(u);
  Real cosh_u = (eu + Real(1L) / eu) / Real(2L);
  Real sinh_u = (eu - Real(1L) / eu) / Real(2L);
  Real v = half_pi * sinh_u;
  if (p.kind == RuleKind::kTanhSinh) {
    Real d = (p.b - p.a) / Real(2L);
    Real e = exp(-(Real(2L) * abs(v)));  // e^{-2|v|}
    Real gap = Real(2L) * e / (Real(1L) + e);  // 1 - |tanh v|
    if (gap.is_zero()) return false;
    out.s = v.sign() >= 0 ? p.b - d * gap : p.a + d * gap;
    Real ev = exp(abs(v));
    Real cosh_v = (ev + Real(1L) / ev) / Real(2L);
    out.w = d * half_pi * cosh_u / (cosh_v * cosh_v);
    if (out.s <= p.a || out.s >= p.b) return false;
  } else {
    Real x = exp(v);
    out.w = half_pi * cosh_u * x;
    if (p.kind == RuleKind::kExpRight) {
      out.s = p.a + x;
      if (out.s <= p.a || out.s > p.edge) return false;
    } else {
      out.s = p.b - x;
      if (out.s >= p.b || out.s < p.edge) return false;
    }
  }
  return out.w > ldexp(Real(1L), -bits - 40);
}

// Parameter range [u_lo, u_hi] outside which every node is dropped.
std::pair<double, double> u_range(const Piece& p, long bits) {
  const double pi = 3.14159265358979323846;
  double big = (bits + 48) * std::log(2.0);
  if (p.kind == RuleKind::kTanhSinh) {
    double u = std::asinh(big / pi) + 0.5;
    return {-u, u};
  }
  double dist = std::max(1e-300, std::fabs((p.kind == RuleKind::kExpRight ? p.edge - p.a
                                                                           : p.b - p.edge)
                                               .to_double()));
  double lo = -std::asinh(2.0 * big / pi) - 0.5;
  double hi = std::asinh(2.0 / pi * std::log(dist)) + 0.5;
  return {lo, std::max(hi, lo + 1.0)};
}

// |integral beyond an open end|, from the decay rate of |g| just inside it.
Real tail_bound(const LineIntegrand& g, const Real& end, const Real& inner, size_t piece) {
  Real g_end = abs(g(end, piece));
  if (g_end.is_zero()) return Real(0L);
  Real g_in = abs(g(inner, piece));
  Real span = abs(inner - end);
  if (g_in.is_zero() || g_in <= g_end) return g_end * Real(1000L);
  Real rate = log(g_in / g_end) / span;
  if (rate < Real(0.01)) return g_end * Real(1000L);
  return g_end / rate * Real(2L);
}

}  // namespace

QuadratureResult integrate_line(const LineIntegrand& g, const Real& lo, const Real& hi,
                                bool open_lo, bool open_hi, std::vector<Real> breakpoints,
                                const QuadratureOptions& opts) {
  const long bits = WorkingPrecision::bits();
  if (!(lo < hi)) fail(ErrorClass::kDomain, "integration range is empty");
  std::sort(breakpoints.begin(), breakpoints.end());
  std::vector<Real> cuts;
  for (const auto& b : breakpoints) {
    if (b > lo && b < hi && (cuts.empty() || b > cuts.back())) cuts.push_back(b);
  }
  if (cuts.empty() && open_lo && open_hi) cuts.push_back((lo + hi) / Real(2L));

  std::vector<Real> ends{lo};
  ends.insert(ends.end(), cuts.begin(), cuts.end());
  ends.push_back(hi);
  std::vector<Piece> pieces;
  for (size_t k = 0; k + 1 < ends.size(); ++k) {
    Piece p{RuleKind::kTanhSinh, ends[k], ends[k + 1], Real(0L), k};
    if (k == 0 && open_lo) {
      p.kind = RuleKind::kExpLeft;
      p.edge = lo;
    } else if (k + 2 == ends.size() && open_hi) {
      p.kind = RuleKind::kExpRight;
      p.edge = hi;
    }
    pieces.push_back(p);
  }

  QuadratureResult res;
  Real tail(0L);
  if (open_lo) {
    Real inner = min(lo + Real(1L), (lo + ends[1]) / Real(2L));
    tail += tail_bound(g, lo, inner, 0);
    res.evaluations += 2;
  }
  if (open_hi) {
    Real inner = max(hi - Real(1L), (hi + ends[ends.size() - 2]) / Real(2L));
    tail += tail_bound(g, hi, inner, pieces.size() - 1);
    res.evaluations += 2;
  }

  const long target_bits = opts.target_bits > 0 ? opts.target_bits : std::min<long>((bits * 2) / 5, 80);
  const Real target = ldexp(Real(1L), -target_bits);
  std::vector<Complex> totals(pieces.size(), Complex(0L));
  Real magnitude(0L);
  Complex prev;
  std::vector<Real> diffs;
  for (int level = 0; level <= opts.max_levels; ++level) {
    const Real h = ldexp(Real(1L), -level);
    Complex sum(0L);
    for (size_t pi = 0; pi < pieces.size(); ++pi) {
      const Piece& p = pieces[pi];
      auto [ulo, uhi] = u_range(p, bits);
      long kmin = static_cast<long>(std::floor(ulo * std::ldexp(1.0, level)));
      long kmax = static_cast<long>(std::ceil(uhi * std::ldexp(1.0, level)));
      for (long k = kmin; k <= kmax; ++k) {
        if (level > 0 && k % 2 == 0) continue;
        Node nd;
        if (!node(p, Real(k) * h, bits, nd)) continue;
        Complex v = g(nd.s, p.index) * nd.w;
        ++res.evaluations;
        totals[pi] += v;
        magnitude += abs(v);
      }
      sum += totals[pi];
    }
    Complex estimate = sum * h;
    if (level > 0) {
      diffs.push_back(abs(estimate - prev));
      if (level >= 3 && diffs.back() < target) {
        res.value = estimate;
        res.levels = level;
        res.error = diffs.back() + tail + ldexp(magnitude * h, 12 - bits);
        return res;
      }
    }
    prev = estimate;
  }
  size_t m = diffs.size();
  if (m >= 2 && diffs[m - 1] >= diffs[m - 2]) {
    fail(ErrorClass::kConvergence, "quadrature did not converge: level difference " +
                                       diffs[m - 1].to_string(3) + " after " +
                                       std::to_string(opts.max_levels) + " levels");
  }
  res.value = prev;
  res.levels = opts.max_levels;
  res.error = diffs.back() + tail + ldexp(magnitude, 12 - bits - opts.max_levels);
  return res;
}

QuadratureResult quadrature(const TracedPath& path,
                            const std::function<Complex(const Complex&, const Complex&)>& integrand,
                            int levels, const Real& lo, const Real& hi) {
  WorkingPrecision wp(path.precision());
  Real a = max(lo, path.s_min());
  Real b = min(hi, path.s_max());
  QuadratureOptions opts;
  opts.max_levels = levels;
  LineIntegrand g = [&](const Real& s, size_t) {
    Complex dtds;
    Complex t = path.locate(s, &dtds);
    return integrand(t, dtds);
  };
  return integrate_line(g, a, b, a == path.s_min(), b == path.s_max(), {}, opts);
}

QuadratureResult quadrature(const TracedPath& path,
                            const std::function<Complex(const Complex&, const Complex&)>& integrand,
                            int levels) {
  return quadrature(path, integrand, levels, path.s_min(), path.s_max());
}

}  // namespace chowreg

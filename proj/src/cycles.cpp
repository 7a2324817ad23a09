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

#include "chowreg/cycles.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "chowreg/error.hpp"

namespace chowreg {

namespace {

const P1Point& zero_point() {
  static const P1Point z(CyclotomicNumber::integer(1, 0));
  return z;
}

const P1Point& one_point() {
  static const P1Point o(CyclotomicNumber::integer(1, 1));
  return o;
}

// kSame / kDistinct, throwing on kUndecided.
bool same(const P1Point& a, const P1Point& b, long bits) {
  PointMatch m = compare_points(a, b, bits);
  if (m == PointMatch::kUndecided) {
    fail(ErrorClass::kPrecision, "cannot decide whether " + a.to_string(12) + " equals " +
                                     b.to_string(12) + " at " + std::to_string(bits) + " bits");
  }
  return m == PointMatch::kSame;
}

bool on_face(const P1Point& x, long bits) {
  return x.is_infinity() || same(x, zero_point(), bits);
}

template <typename F>
auto with_escalation(long bits, const char* what, F fn) -> decltype(fn(bits)) {
  long b = bits;
  for (int attempt = 0; attempt < 3; ++attempt, b *= 2) {
    try {
      return fn(b);
    } catch (const Error& e) {
      if (e.error_class() != ErrorClass::kPrecision || attempt == 2) {
        if (e.error_class() == ErrorClass::kPrecision) {
          fail(ErrorClass::kPrecision, std::string(what) + " undecided at " +
                                           std::to_string(b) + " bits: " + e.what());
        }
        throw;
      }
    }
  }
  fail(ErrorClass::kPrecision, std::string(what) + " undecided");
}

std::string join_strings(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (size_t k = 0; k < parts.size(); ++k) out += (k ? ", " : "") + parts[k];
  return out + ")";
}

PointPrecycle signed_sum(int n, int order, std::vector<std::pair<PointPrecycle, long>> parts,
                         long bits) {
  PointPrecycle out;
  out.n = n;
  out.order = order;
  for (auto& [pp, sign] : parts) {
    for (auto& c : pp.components) {
      c.mult *= sign;
      out.components.push_back(std::move(c));
    }
  }
  return reduce(std::move(out), bits);
}

}  // namespace

std::string CurveComponent::to_string() const {
  std::vector<std::string> parts;
  for (const auto& f : coords) parts.push_back(f.to_string());
  return join_strings(parts);
}

std::string PointComponent::to_string() const {
  std::vector<std::string> parts;
  for (const auto& x : coords) parts.push_back(x.to_string());
  return join_strings(parts);
}

Precycle make_precycle(int n, std::vector<CurveComponent> components) {
  if (n < 1) fail(ErrorClass::kDomain, "cube dimension must be positive");
  int order = 1;
  for (const auto& c : components) {
    if (c.n() != n) {
      fail(ErrorClass::kDomain, "component " + c.to_string() + " has " + std::to_string(c.n()) +
                                    " coordinates, expected " + std::to_string(n));
    }
    bool moving = false;
    for (const auto& f : c.coords) {
      order = common_order(order, f.order());
      if (f.is_zero()) fail(ErrorClass::kDomain, "coordinate identically 0 in " + c.to_string());
      if (f.is_constant() && f.constant_value().is_one()) {
        fail(ErrorClass::kDomain, "coordinate identically 1 in " + c.to_string());
      }
      moving = moving || !f.is_constant();
    }
    if (!moving) fail(ErrorClass::kDomain, "component " + c.to_string() + " is a point");
  }
  std::map<std::string, CurveComponent> merged;
  for (auto& c : components) {
    for (auto& f : c.coords) f = f.promote(order);
    std::string key = c.to_string();
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(key, std::move(c));
    } else {
      it->second.mult += c.mult;
    }
  }
  Precycle z;
  z.n = n;
  z.order = order;
  for (auto& [key, c] : merged) {
    if (c.mult != 0) z.components.push_back(std::move(c));
  }
  return z;
}

PointPrecycle reduce(PointPrecycle z, long precision_bits) {
  std::vector<PointComponent> merged;
  for (auto& c : z.components) {
    bool hit = false;
    for (auto& m : merged) {
      bool all = true;
      for (int k = 0; k < c.n() && all; ++k) all = same(c.coords[k], m.coords[k], precision_bits);
      if (all) {
        m.mult += c.mult;
        hit = true;
        break;
      }
    }
    if (!hit) merged.push_back(std::move(c));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const PointComponent& c) { return c.mult == 0; }),
               merged.end());
  std::stable_sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
    return a.to_string() < b.to_string();
  });
  z.components = std::move(merged);
  return z;
}

bool is_degenerate(const CurveComponent& c) {
  int moving = 0;
  const RationalFunction* f = nullptr;
  for (const auto& g : c.coords) {
    if (!g.is_constant()) {
      ++moving;
      f = &g;
    }
  }
  return moving == 1 && f->degree() == 1;
}

Precycle drop_degenerate(const Precycle& z) {
  Precycle out = z;
  out.components.clear();
  for (const auto& c : z.components) {
    if (!is_degenerate(c)) out.components.push_back(c);
  }
  return out;
}

ProperReport check_face_proper(const Precycle& z, long precision_bits) {
  ProperReport report;
  for (size_t ci = 0; ci < z.components.size(); ++ci) {
    const auto& c = z.components[ci];
    std::vector<P1Point> candidates;
    for (const auto& f : c.coords) {
      if (f.is_constant()) continue;
      for (const auto& d : divisor(f, precision_bits)) {
        bool seen = false;
        for (const auto& x : candidates) seen = seen || same(x, d.location, precision_bits);
        if (!seen) candidates.push_back(d.location);
      }
    }
    for (const auto& t : candidates) {
      std::vector<P1Point> values;
      int faces = 0;
      bool escapes = false;
      for (const auto& f : c.coords) {
        values.push_back(eval(f, t, precision_bits));
        faces += on_face(values.back(), precision_bits);
        escapes = escapes || (!values.back().is_infinity() &&
                              same(values.back(), one_point(), precision_bits));
      }
      if (faces >= 2 && !escapes) {
        report.ok = false;
        report.violations.push_back({ci, t, std::move(values)});
      }
    }
  }
  return report;
}

PointPrecycle facet(const Precycle& z, int i, bool at_infinity, long precision_bits) {
  if (i < 1 || i > z.n) fail(ErrorClass::kDomain, "facet index out of range");
  PointPrecycle out;
  out.n = z.n - 1;
  out.order = z.order;
  for (const auto& c : z.components) {
    const RationalFunction& f = c.coords[i - 1];
    if (f.is_constant()) continue;
    for (const auto& d : divisor(f, precision_bits)) {
      if ((d.multiplicity < 0) != at_infinity) continue;
      PointComponent p;
      p.mult = c.mult * std::abs(d.multiplicity);
      bool escapes = false;
      for (int k = 0; k < z.n && !escapes; ++k) {
        if (k == i - 1) continue;
        P1Point v = eval(c.coords[k], d.location, precision_bits);
        escapes = !v.is_infinity() && same(v, one_point(), precision_bits);
        p.coords.push_back(std::move(v));
      }
      if (!escapes) out.components.push_back(std::move(p));
    }
  }
  return reduce(std::move(out), precision_bits);
}

PointPrecycle facet(const PointPrecycle& z, int i, bool at_infinity, long precision_bits) {
  if (i < 1 || i > z.n) fail(ErrorClass::kDomain, "facet index out of range");
  PointPrecycle out;
  out.n = z.n - 1;
  out.order = z.order;
  for (const auto& c : z.components) {
    const P1Point& x = c.coords[i - 1];
    bool hit = at_infinity ? x.is_infinity()
                           : (!x.is_infinity() && same(x, zero_point(), precision_bits));
    if (!hit) continue;
    PointComponent p;
    p.mult = c.mult;
    for (int k = 0; k < z.n; ++k) {
      if (k != i - 1) p.coords.push_back(c.coords[k]);
    }
    out.components.push_back(std::move(p));
  }
  return reduce(std::move(out), precision_bits);
}

PointPrecycle boundary(const Precycle& z, long precision_bits) {
  std::vector<std::pair<PointPrecycle, long>> parts;
  for (int i = 1; i <= z.n; ++i) {
    long sign = i % 2 ? -1 : 1;
    for (bool inf : {false, true}) {
      PointPrecycle f = facet(z, i, inf, precision_bits);
      for (const auto& p : f.components) {
        for (const auto& x : p.coords) {
          if (on_face(x, precision_bits)) {
            fail(ErrorClass::kProperness,
                 "facet point " + p.to_string() + " of z_" + std::to_string(i) +
                     (inf ? " = inf" : " = 0") +
                     " lies on a further face; the precycle is not face-proper "
                     "(see check_face_proper)");
          }
        }
      }
      parts.emplace_back(std::move(f), inf ? -sign : sign);
    }
  }
  return signed_sum(z.n - 1, z.order, std::move(parts), precision_bits);
}

bool is_closed(const Precycle& z, long precision_bits) {
  return with_escalation(precision_bits, "closedness",
                         [&](long b) { return boundary(z, b).empty(); });
}

bool FaceProfile::vanishes(int i, bool at_infinity) const {
  for (const auto& e : entries) {
    if (e.i == i && e.at_infinity == at_infinity) return e.vanishes;
  }
  fail(ErrorClass::kDomain, "facet not in profile");
}

bool FaceProfile::normalized() const {
  for (const auto& e : entries) {
    if (e.vanishes) continue;
    if (!e.at_infinity || e.i < n) return false;
  }
  return true;
}

FaceProfile face_vanishing_profile(const Precycle& z, long precision_bits) {
  return with_escalation(precision_bits, "face profile", [&](long b) {
    FaceProfile prof;
    prof.n = z.n;
    for (int i = 1; i <= z.n; ++i) {
      for (bool inf : {false, true}) {
        prof.entries.push_back({i, inf, facet(z, i, inf, b).empty()});
      }
    }
    return prof;
  });
}

Precycle normalize(const Precycle& input, long precision_bits) {
  Precycle z = drop_degenerate(input);
  for (int i = 1; i <= z.n; ++i) {
    if (!facet(z, i, false, precision_bits).empty()) {
      fail(ErrorClass::kDomain, "normalize requires input whose zero facets vanish (z_" +
                                    std::to_string(i) + " = 0 does not)");
    }
  }
  const int order = z.order;
  const RationalFunction t = RationalFunction::t(order);
  const RationalFunction one = RationalFunction::constant(CyclotomicNumber::integer(order, 1));
  for (int l = 1; l < z.n; ++l) {
    PointPrecycle pts = facet(z, l, true, precision_bits);
    if (pts.empty()) continue;
    std::vector<CurveComponent> comps = z.components;
    for (const auto& p : pts.components) {
      std::vector<CyclotomicNumber> a;
      for (const auto& x : p.coords) {
        if (!x.is_exact()) {
          fail(ErrorClass::kDomain, "normalize: facet point " + p.to_string() +
                                        " is not rational over the coefficient field");
        }
        if (on_face(x, precision_bits)) {
          fail(ErrorClass::kProperness, "normalize: facet point " + p.to_string() +
                                            " lies on a further face");
        }
        a.push_back(x.exact().promote(order));
      }
      // Solve join(t, w) = a_l for w.
      RationalFunction al = RationalFunction::constant(a[l - 1]);
      CurveComponent corr;
      corr.mult = -p.mult;
      for (int k = 0; k < l - 1; ++k) corr.coords.push_back(RationalFunction::constant(a[k]));
      corr.coords.push_back(t);
      corr.coords.push_back(al * (t - one) / (t - al));
      for (size_t k = l; k < a.size(); ++k) {
        corr.coords.push_back(RationalFunction::constant(a[k]));
      }
      comps.push_back(std::move(corr));
    }
    z = make_precycle(z.n, std::move(comps));
  }
  ProperReport rep = check_face_proper(z, precision_bits);
  if (!rep.ok) {
    fail(ErrorClass::kProperness, "normalize produced an improper precycle at t = " +
                                      rep.violations.front().parameter.to_string());
  }
  return z;
}

}  // namespace chowreg

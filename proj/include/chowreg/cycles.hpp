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

#ifndef CHOWREG_CYCLES_HPP
#define CHOWREG_CYCLES_HPP

// Parametrized cubical precycles, facets, the Bloch differential and the
// normalization operator.

#include <string>
#include <vector>

#include "chowreg/divisor.hpp"
#include "chowreg/polynomial.hpp"

namespace chowreg {

/// t -> (f_1(t), ..., f_n(t)) with a multiplicity.
struct CurveComponent {
  std::vector<RationalFunction> coords;
  long mult = 1;

  int n() const { return static_cast<int>(coords.size()); }
  std::string to_string() const;
};

struct PointComponent {
  std::vector<P1Point> coords;
  long mult = 1;

  int n() const { return static_cast<int>(coords.size()); }
  std::string to_string() const;
};

/// Curve-level precycle in the n-cube, codimension p = n - 1.
struct Precycle {
  int n = 0;
  int order = 1;
  std::vector<CurveComponent> components;

  int p() const { return n - 1; }
  bool empty() const { return components.empty(); }
};

/// Point-level precycle, codimension p = n.
struct PointPrecycle {
  int n = 0;
  int order = 1;
  std::vector<PointComponent> components;

  int p() const { return n; }
  bool empty() const { return components.empty(); }
};

/// Validates the component invariants, lifts all coordinates to a common
/// field, merges equal components and drops zero multiplicities. The
/// component order is deterministic.
Precycle make_precycle(int n, std::vector<CurveComponent> components);

/// Merges points within the numeric tolerance of `precision_bits`. Throws a
/// precision error when two points can be neither identified nor separated.
PointPrecycle reduce(PointPrecycle z, long precision_bits);

bool is_degenerate(const CurveComponent& c);
/// Drops degenerate components (zero in the quotient by degenerate cycles).
Precycle drop_degenerate(const Precycle& z);

struct ProperViolation {
  size_t component;
  P1Point parameter;
  std::vector<P1Point> values;
};

struct ProperReport {
  bool ok = true;
  std::vector<ProperViolation> violations;
};

ProperReport check_face_proper(const Precycle& z, long precision_bits);

/// Restriction to the facet z_i = v (i is 1-based, v is 0 or infinity),
/// unsigned, without properness checks. Points with a remaining coordinate
/// equal to 1 are dropped.
PointPrecycle facet(const Precycle& z, int i, bool at_infinity, long precision_bits);
PointPrecycle facet(const PointPrecycle& z, int i, bool at_infinity, long precision_bits);

/// sum_i (-1)^i (facet(i, 0) - facet(i, inf)). Throws a properness error if
/// a facet point lies on a further face.
PointPrecycle boundary(const Precycle& z, long precision_bits);

/// Boundary vanishing, with two precision doublings before giving up with
/// an "undecided" precision error.
bool is_closed(const Precycle& z, long precision_bits);

struct FacetEntry {
  int i;
  bool at_infinity;
  bool vanishes;
};

struct FaceProfile {
  int n = 0;
  std::vector<FacetEntry> entries;

  bool vanishes(int i, bool at_infinity) const;
  /// All zero facets vanish and all infinity facets with i < n vanish.
  bool normalized() const;
};

FaceProfile face_vanishing_profile(const Precycle& z, long precision_bits);

/// Bloch's normalization: for l = 1..n-1 subtract the pullback of the facet
/// z_l = infinity along the join of coordinates l, l+1. Requires all zero
/// facets to vanish already.
Precycle normalize(const Precycle& z, long precision_bits);

}  // namespace chowreg

#endif  // CHOWREG_CYCLES_HPP

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

#ifndef CHOWREG_REGULATOR_HPP
#define CHOWREG_REGULATOR_HPP

// Regulator values over a point: n = 1 (p = 1) and n = 3 (p = 2) currents,
// the p = 1 intersection count at n = 2, phase-independence and torsion.

#include <optional>
#include <string>
#include <vector>

#include "chowreg/cycles.hpp"
#include "chowreg/quadrature.hpp"
#include "chowreg/wavefront.hpp"

namespace chowreg {

enum class TermKind { kPoint, kLine, kIntersection };

const char* term_kind_name(TermKind k);

struct RegulatorTerm {
  size_t component = 0;
  long mult = 0;
  TermKind kind = TermKind::kLine;
  /// Contribution to the value, multiplicity and 2 pi i factors included.
  Complex value;
  Real error;
  size_t path = 0;
  /// Crossing location and orientation sign for intersection terms.
  std::optional<Complex> t;
  int sign = 0;
};

struct PhaseIndependenceReport {
  bool ok = true;
  std::vector<PhaseSchedule> schedules;
  std::vector<Complex> values;
  std::vector<Real> errors;
  /// Lattice multiple k with values[i] - values[0] ~ k (2 pi i)^p.
  std::vector<long> lattice_multiples;
  Real max_deviation;
};

struct RegulatorValue {
  int p = 0;
  ComplexApprox value;
  int lattice_power = 0;
  std::vector<RegulatorTerm> breakdown;
  PhaseSchedule schedule_used;
  Real quadrature_error;
  /// Filled by the full pipeline only.
  std::optional<PhaseIndependenceReport> agreement;
};

struct TorsionResult {
  std::optional<long> order;
  /// value / (2 pi i)^p.
  Complex q;
  /// Reduced fraction k/m for q, canonical in [-1/2, 1/2) (when order is set).
  Rational certificate;
  Real residual;
};

struct RegulatorOptions {
  SearchOptions search;
  QuadratureOptions quadrature;
  /// Bounds of the extra pipeline schedules: bound * shrink^k.
  double shrink = 0.3;
  int extra_schedules = 2;
};

/// (2 pi i)^p at the working precision.
Complex lattice_generator(int p);

/// Representative of v modulo (2 pi i)^p with Re(v / (2 pi i)^p) in [-1/2, 1/2).
Complex canonical_representative(const Complex& v, int p, long* multiple = nullptr);

/// Sum of mult * log^phase(coordinate) over a point cycle in the 1-cube.
RegulatorValue reg_n1(const PointPrecycle& z, const Real& phase);

/// Signed count of T_1 cap T_2 on a curve cycle in the 2-cube.
long intersection_number_n2(const Precycle& z, const PhaseSchedule& s,
                            const TraceOptions& opts = {});

/// Line-integral and intersection terms on a curve cycle in the 3-cube,
/// without the closedness and normalization preconditions.
RegulatorValue evaluate_currents(const Precycle& z, const PhaseSchedule& s,
                                 const RegulatorOptions& opts = {});

/// Same, for a closed normalized cycle.
RegulatorValue reg_n3(const Precycle& z, const PhaseSchedule& s,
                      const RegulatorOptions& opts = {});

/// Full pipeline: closedness, normalization, schedule search, evaluation at
/// three schedules and an agreement check modulo the lattice. Returns the
/// smallest-bound evaluation.
RegulatorValue regulator(const Precycle& z, const RegulatorOptions& opts = {});
RegulatorValue regulator(const PointPrecycle& z, const RegulatorOptions& opts = {});

PhaseIndependenceReport phase_independence_check(const Precycle& z,
                                                 const std::vector<PhaseSchedule>& schedules,
                                                 const RegulatorOptions& opts = {});
/// Agreement of already computed values.
PhaseIndependenceReport compare_values(const std::vector<RegulatorValue>& values);

TorsionResult torsion_order(const RegulatorValue& v, long max_order, const Real& tol);

/// dx ^ dy coefficient of the pullback of log z1 dz2/z2 ^ dz3/z3 to the
/// curve at parameter t.
Complex pulled_back_two_form(const CurveComponent& c, const Complex& t);

}  // namespace chowreg

#endif  // CHOWREG_REGULATOR_HPP

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

#ifndef CHOWREG_WAVEFRONT_HPP
#define CHOWREG_WAVEFRONT_HPP

// Perturbed branch-cut loci T^eps_f = {arg f = pi - eps} on parametrized
// curves, their pairwise intersections, and admissibility of schedules.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chowreg/cycles.hpp"
#include "chowreg/divisor.hpp"
#include "chowreg/real.hpp"

namespace chowreg {

struct PhaseSchedule {
  Real eps_bound;
  std::vector<Real> phases;
  /// False when the nested bound exp(-1/eps_k) had to be replaced.
  bool strict = true;
  bool equal_phase = false;

  int n() const { return static_cast<int>(phases.size()); }
  std::string to_string(int digits = 6) const;
};

/// eps_1 = lambda * bound, eps_{k+1} = lambda * exp(-1/eps_k). Throws a
/// schedule error when a phase falls below 2^(16 - bits) of the working
/// precision.
PhaseSchedule make_schedule(const Real& eps_bound, int n, const Real& lambda);

/// eps_{k+1} = lambda * eps_k^2: distinct, decreasing, representable phases
/// that do not satisfy the nested exponential bound (strict = false).
PhaseSchedule relaxed_schedule(const Real& eps_bound, int n, const Real& lambda);

/// All phases equal to eps. Not a valid nested schedule; used to reproduce
/// the equal-phase failure.
PhaseSchedule equal_phase_schedule(const Real& eps, int n);

/// 0 < eps_1 < bound and 0 < eps_{k+1} < exp(-1/eps_k).
bool satisfies_nested_bound(const PhaseSchedule& s);

struct TraceOptions {
  /// Initial sample spacing in s = log r.
  double step = 0.125;
  /// Tracing stops once the spherical speed |dt/ds| / (1 + |t|^2) < 2^-tail_bits.
  long tail_bits = 100;
  long max_samples = 400000;
};

struct PathSample {
  Real s;
  Complex t;
  Complex dtds;
};

/// One branch of T^phase_f, sampled on a uniform grid in s = log|f|.
/// Oriented from the pole (s -> +inf) to the zero (s -> -inf).
class TracedPath {
 public:
  int coord_index = 0;
  Real phase;
  P1Point pole_end;
  P1Point zero_end;

  const std::vector<PathSample>& samples() const { return samples_; }
  const Real& step() const { return step_; }
  const Real& s_min() const { return samples_.front().s; }
  const Real& s_max() const { return samples_.back().s; }
  long precision() const { return bits_; }

  /// Point of the branch at s in [s_min, s_max] (Newton from the cubic
  /// Hermite interpolant of the samples). dtds is optional.
  Complex locate(const Real& s, Complex* dtds = nullptr) const;

  /// Halves the sample spacing.
  void refine();

  /// Arg residual |arg(e^{i phase} f(t)) - pi| at a sample.
  Real arg_residual(size_t k) const;

 private:
  friend std::vector<TracedPath> trace_wavefront(const RationalFunction&, int, const Real&,
                                                 const TraceOptions&);
  Complex direction() const;
  Complex velocity(const Complex& t) const;
  bool newton(const Real& s, Complex& t) const;
  bool step_to(const Real& s_from, const Complex& t_from, const Real& s_to, Complex& t_to) const;

  std::vector<Complex> p_, q_;
  std::vector<PathSample> samples_;
  Real step_;
  long bits_ = 256;
};

/// One path per branch (deg f paths). Throws a schedule error on a
/// non-generic phase (critical value of f on the ray).
std::vector<TracedPath> trace_wavefront(const RationalFunction& f, int coord_index,
                                        const Real& phase, const TraceOptions& opts = {});

struct WavefrontIntersection {
  size_t path_index = 0;
  int i = 0;
  int j = 0;
  Real s;
  Complex t;
  /// Sign of d arg f_j / ds along the path (s increasing towards the pole).
  int sign = 0;
  /// |d arg f_j / ds| at the crossing.
  double transversality = 0.0;
};

/// Crossings of the paths of coordinate i with T^phase_j_{f_j}. Throws a
/// schedule error on a tangential crossing.
std::vector<WavefrontIntersection> find_pair_intersections(const CurveComponent& c,
                                                           const std::vector<TracedPath>& paths,
                                                           int j, const Real& phase_j);

struct AdmissibilityFailure {
  size_t component = 0;
  std::string kind;
  std::string detail;
  std::optional<Complex> witness;
};

struct AdmissibilityReport {
  bool ok = true;
  std::vector<AdmissibilityFailure> failures;
};

/// Checks on every component: the loci of each coordinate trace cleanly,
/// crossings of T_1 with T_2 are transverse and away from the faces, path
/// endpoints avoid the other cuts, and (n = 3) no crossing lies on T_3.
AdmissibilityReport admissible(const Precycle& z, const PhaseSchedule& s,
                               const TraceOptions& opts = {});

/// Point level: no coordinate on its cut.
AdmissibilityReport admissible(const PointPrecycle& z, const PhaseSchedule& s);

struct SearchOptions {
  Real eps_start = Real(0.5);
  int attempts = 12;
  std::uint64_t seed = 1;
  TraceOptions trace;
};

/// First admissible schedule over seeded lambdas and shrinking bounds. Falls
/// back to relaxed schedules when the nested bound underflows.
PhaseSchedule search_schedule(const Precycle& z, const SearchOptions& opts,
                              AdmissibilityReport* last_report = nullptr);

/// CSV: format_version,component_id,coord_index,path_index,sample_index,re_t,im_t,r,arg_residual
void write_paths_csv(std::ostream& os, size_t component_id,
                     const std::vector<TracedPath>& paths, bool header);
/// CSV: format_version,component_id,i,j,re_t,im_t,sign
void write_intersections_csv(std::ostream& os, size_t component_id,
                             const std::vector<WavefrontIntersection>& xs, bool header);

}  // namespace chowreg

#endif  // CHOWREG_WAVEFRONT_HPP

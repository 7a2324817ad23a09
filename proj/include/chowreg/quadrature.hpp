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

#ifndef CHOWREG_QUADRATURE_HPP
#define CHOWREG_QUADRATURE_HPP

// Double-exponential quadrature in the path parameter s = log r.

#include <functional>
#include <vector>

#include "chowreg/real.hpp"
#include "chowreg/wavefront.hpp"

namespace chowreg {

struct QuadratureOptions {
  /// Finest level; the step at level k is 2^-k.
  int max_levels = 10;
  /// Stop once successive levels differ by less than 2^-target_bits.
  long target_bits = 0;  // 0: min(0.4 * working precision, 80)
};

struct QuadratureResult {
  Complex value;
  /// Level difference + tail bound + rounding.
  Real error;
  int levels = 0;
  long evaluations = 0;
};

/// g(s, piece): piece is the index of the interval between breakpoints that
/// contains s (0 for the leftmost).
using LineIntegrand = std::function<Complex(const Real& s, size_t piece)>;

/// Integral of g over [lo, hi], split at the sorted breakpoints. An open end
/// stands for a tail that was cut off at lo (or hi): the integrand is taken
/// to vanish beyond it, an exp-sinh rule serves the outermost piece, and an
/// estimate of the neglected tail is added to the error. Closed ends use
/// tanh-sinh. Throws a convergence error when the level differences stop
/// decreasing before the target is met.
QuadratureResult integrate_line(const LineIntegrand& g, const Real& lo, const Real& hi,
                                bool open_lo, bool open_hi, std::vector<Real> breakpoints,
                                const QuadratureOptions& opts = {});

/// Integral of integrand(t(s), dt/ds) ds along a traced path over
/// [lo, hi] (clamped to the traced range; ends that reach the traced range
/// are treated as open).
QuadratureResult quadrature(const TracedPath& path,
                            const std::function<Complex(const Complex& t, const Complex& dtds)>&
                                integrand,
                            int levels, const Real& lo, const Real& hi);

/// Whole traced range.
QuadratureResult quadrature(const TracedPath& path,
                            const std::function<Complex(const Complex& t, const Complex& dtds)>&
                                integrand,
                            int levels = 10);

}  // namespace chowreg

#endif  // CHOWREG_QUADRATURE_HPP

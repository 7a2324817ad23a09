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

#ifndef CHOWREG_SPECIAL_FUNCTIONS_HPP
#define CHOWREG_SPECIAL_FUNCTIONS_HPP

#include "chowreg/real.hpp"

namespace chowreg {

/// Branch of log with argument in (-pi - phase, pi - phase]; the cut lies
/// along arg z = pi - phase.
struct BranchSpec {
  Real phase;
};

/// pi at `precision_bits`, as a real ball with radius <= 1 ulp.
ComplexApprox pi_const(long precision_bits);

/// log|z| + i arg z with arg in (-pi - phase, pi - phase]. Throws a precision
/// error when the ball contains 0 or straddles the cut.
ComplexApprox log_eps(const ComplexApprox& z, const BranchSpec& b);

/// Point version without error tracking, for quadrature integrands.
Complex log_eps(const Complex& z, const Real& phase);

/// Angular distance (in [0, pi]) from arg z to the ray arg = pi - phase.
Real distance_to_cut_angle(const Complex& z, const Real& phase);

/// Principal dilogarithm, cut along [1, inf). On the cut the limit from below
/// is returned; Li2(1) = pi^2 / 6.
ComplexApprox li2(const ComplexApprox& z);

}  // namespace chowreg

#endif  // CHOWREG_SPECIAL_FUNCTIONS_HPP

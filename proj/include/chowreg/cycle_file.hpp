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

#ifndef CHOWREG_CYCLE_FILE_HPP
#define CHOWREG_CYCLE_FILE_HPP

// Line-oriented cycle definition files:
//
//   field cyclotomic(5)
//   cycle petras n=3 p=2
//   component mult=1 1-zeta/t ; 1-t ; 1/t^5
//
// Expressions use integers, t, zeta, i (zeta when 4 | N), + - * / ^ and
// parentheses. Lines starting with '#' are comments.

#include <string>
#include <vector>

#include "chowreg/cycles.hpp"

namespace chowreg {

struct CycleDefinition {
  std::string name;
  int n = 0;
  int p = 0;
  /// Set when n == p + 1.
  Precycle curve;
  /// Set when n == p; every coordinate is a constant.
  PointPrecycle points;

  bool point_level() const { return n == p; }
};

struct CycleFile {
  int order = 1;
  std::vector<CycleDefinition> cycles;
};

/// Throws ErrorClass::kParse with "line L, column C: ..." messages.
CycleFile parse_cycle_file(const std::string& text);

/// Parses a single coordinate expression over Q(zeta_order)(t).
RationalFunction parse_expression(const std::string& text, int order);

/// Canonical text; parse_cycle_file(serialize_cycle_file(f)) reproduces f.
std::string serialize_cycle_file(const CycleFile& file);

}  // namespace chowreg

#endif  // CHOWREG_CYCLE_FILE_HPP

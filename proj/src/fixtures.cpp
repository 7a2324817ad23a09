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

#include "chowreg/fixtures.hpp"

#include <map>

#include "chowreg/error.hpp"

namespace chowreg {

namespace {

const std::map<std::string, std::string>& table() {
  static const std::map<std::string, std::string> t = {
      {"z1_totaro",
       "# Totaro's cycle, 24-torsion in CH^2(Q, 3)\n"
       "field cyclotomic(1)\n"
       "cycle z1_totaro n=3 p=2\n"
       "component mult=1 1-1/t ; 1-t ; 1/t\n"},
      {"petras_zeta5",
       "# generator of CH^2(Q(sqrt 5), 3) over Q(zeta_5); zeta^4 is the conjugate\n"
       "field cyclotomic(5)\n"
       "cycle petras_zeta5 n=3 p=2\n"
       "component mult=1 1-1/t ; 1-t ; 1/t\n"
       "component mult=1 1-zeta/t ; 1-t ; 1/t^5\n"
       "component mult=1 1-zeta^4/t ; 1-t ; 1/t^5\n"},
      {"mccarthy_counterexample",
       "# admissible for no equal-phase perturbation: T-loci meet at t = tan(eps)\n"
       "field cyclotomic(4)\n"
       "cycle mccarthy_counterexample n=3 p=2\n"
       "component mult=1 i*t-1 ; -(1+t)*(1+3*t)/((1+i*t)*(1-2*t)) ; (i*t-1)/(3+t)\n"},
      {"graph_4_2",
       "field cyclotomic(1)\n"
       "cycle graph_4_2 n=2 p=1\n"
       "component mult=1 t ; (t-4)/(t-2)\n"},
      {"z_minus1",
       "# not closed; used for the line-integral oracle Li2(-1)\n"
       "field cyclotomic(1)\n"
       "cycle z_minus1 n=3 p=2\n"
       "component mult=1 1+1/t ; 1-t ; 1/t\n"},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"z1_totaro", "petras_zeta5",
                                                 "mccarthy_counterexample", "graph_4_2",
                                                 "z_minus1"};
  return names;
}

const std::string& fixture_text(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) fail(ErrorClass::kDomain, "unknown fixture '" + name + "'");
  return it->second;
}

CycleDefinition fixture(const std::string& name) {
  return parse_cycle_file(fixture_text(name)).cycles.front();
}

}  // namespace chowreg

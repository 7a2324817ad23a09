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

#include "chowreg/error.hpp"

namespace chowreg {

const char* error_class_name(ErrorClass c) {
  switch (c) {
    case ErrorClass::kDomain: return "domain";
    case ErrorClass::kParse: return "parse";
    case ErrorClass::kProperness: return "properness";
    case ErrorClass::kSchedule: return "schedule";
    case ErrorClass::kConvergence: return "convergence";
    case ErrorClass::kPrecision: return "precision";
  }
  return "unknown";
}

}  // namespace chowreg

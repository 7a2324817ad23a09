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

#ifndef CHOWREG_FIXTURES_HPP
#define CHOWREG_FIXTURES_HPP

// Built-in cycles, stored as cycle-file text.

#include <string>
#include <vector>

#include "chowreg/cycle_file.hpp"

namespace chowreg {

const std::vector<std::string>& fixture_names();

/// Throws kDomain for unknown names.
const std::string& fixture_text(const std::string& name);

CycleDefinition fixture(const std::string& name);

}  // namespace chowreg

#endif  // CHOWREG_FIXTURES_HPP

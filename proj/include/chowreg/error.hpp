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

#ifndef CHOWREG_ERROR_HPP
#define CHOWREG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace chowreg {

// Error classes double as CLI exit codes (see tools/chowreg.cpp).
enum class ErrorClass {
  kDomain = 1,       // precondition / invalid argument
  kParse = 2,
  kProperness = 3,
  kSchedule = 4,
  kConvergence = 5,
  kPrecision = 6,
};

const char* error_class_name(ErrorClass c);

class Error : public std::runtime_error {
 public:
  Error(ErrorClass c, const std::string& what)
      : std::runtime_error(what), class_(c) {}

  ErrorClass error_class() const { return class_; }
  int exit_code() const { return static_cast<int>(class_); }

 private:
  ErrorClass class_;
};

[[noreturn]] inline void fail(ErrorClass c, const std::string& what) {
  throw Error(c, what);
}

}  // namespace chowreg

#endif  // CHOWREG_ERROR_HPP

// Copyright 2026 The actcause Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace actcause {

// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sort clashes, undeclared symbols and other ill-formed input to a
// library call.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised when a formula cannot be evaluated as requested (open formula,
// modal operator in a static position, box in a query).
class EvalError : public Error {
 public:
  using Error::Error;
};

// Open-mode initial theory has more completions than the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t unassigned_atoms, std::size_t cap)
      : Error("open initial theory has " + std::to_string(unassigned_atoms) +
              " unassigned atoms; completion cap is " + std::to_string(cap)),
        unassigned_atoms_(unassigned_atoms) {}

  std::size_t unassigned_atoms() const { return unassigned_atoms_; }

 private:
  std::size_t unassigned_atoms_;
};

// A theory failed validation; carries the full violation list.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(Join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string Join(const std::vector<std::string>& v) {
    std::string out = "invalid theory:";
    for (const auto& s : v) out += "\n  " + s;
    return out;
  }

  std::vector<std::string> violations_;
};

}  // namespace actcause

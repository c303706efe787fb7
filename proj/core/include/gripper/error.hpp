// Copyright 2026 The Multisurface Gripper Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gripper {

/// Base class for every error raised by the gripper library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter set that violates a model invariant (non-positive radius,
/// mismatched gearing, out-of-range mode index, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised by the simulator; carries the index of the step that failed.
class SimError : public Error {
 public:
  SimError(std::size_t step, const std::string& what)
      : Error("step " + std::to_string(step) + ": " + what), step_(step) {}

  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Configuration / object-file parse failure; line is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

}  // namespace gripper

// Copyright 2026 The fastgate Authors
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

namespace fastgate {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed config, unknown key, schema violation.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Inputs outside the physical or mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operation requested on a geometry or size it does not support.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Iterative solver failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_residual)
      : Error(what), last_residual_(last_residual) {}
  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

/// A mode set or Hessian with a non-positive curvature direction.
class InstabilityError : public DomainError {
 public:
  using DomainError::DomainError;
};

class RoutingError : public Error {
 public:
  using Error::Error;
};

}  // namespace fastgate

// Copyright 2026 The thermwm Authors
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

#ifndef THERMWM_ERRORS_HPP_
#define THERMWM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace thermwm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The truncated Fock space is too small for the requested state or operator.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A closed form hits 0/0 (for example perfect destructive postselection).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Pre- and postselected states are orthogonal, so the weak value is undefined.
class OrthogonalError : public Error {
 public:
  using Error::Error;
};

/// The adaptive integrator's step size collapsed below its floor.
class StiffnessError : public Error {
 public:
  using Error::Error;
};

/// Invalid user-supplied parameters or configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace thermwm

#endif  // THERMWM_ERRORS_HPP_

// Copyright 2026 The qveto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QVETO_QCORE_ERRORS_HPP
#define QVETO_QCORE_ERRORS_HPP

#include <stdexcept>

namespace qveto {

/// Caller supplied an argument outside the operation's domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix or vector fails the physical invariants of a quantum state.
class InvalidStateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Calibration data or a noise configuration is incomplete or malformed.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qveto

#endif  // QVETO_QCORE_ERRORS_HPP

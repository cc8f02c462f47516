// Copyright 2026 The belltab authors
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

#ifndef BELLTAB_ERRORS_HPP
#define BELLTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace belltab {

/// Base class for all belltab errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Malformed text input (Pauli labels, circuit files). Messages carry the
/// offending line/position.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Mismatched qubit counts or out-of-range indices.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A size cap was exceeded (dense qubit limit, group closure cap).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Instruction outside the gate set a backend supports.
class UnsupportedGateError : public Error {
 public:
  using Error::Error;
};

/// Observable a backend cannot measure (non-Hermitian Pauli, or a spin
/// direction off the Pauli axes for the tableau backend).
class UnsupportedObservableError : public Error {
 public:
  using Error::Error;
};

/// Numeric argument outside its documented domain (angles, unit vectors).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace belltab

#endif  // BELLTAB_ERRORS_HPP

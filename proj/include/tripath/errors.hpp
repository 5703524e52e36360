// Copyright 2026 The tripath Authors
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

namespace tripath {

/// Base class for all tripath errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// A state vector violates finiteness or normalization.
class InvalidStateError : public Error {
  public:
    using Error::Error;
};

/// A matrix fails the density-operator invariants (Hermiticity, unit
/// trace, positive semidefiniteness).
class InvalidDensityError : public Error {
  public:
    using Error::Error;
};

/// An operator expected to be unitary is not.
class NonUnitaryError : public Error {
  public:
    using Error::Error;
};

/// A path or state label is not known in the queried scope.
class UnknownLabelError : public Error {
  public:
    using Error::Error;
};

/// A network definition cannot be assembled into a consistent
/// interferometer (bad wiring, label collisions, broken orthonormality).
class NetworkBuildError : public Error {
  public:
    using Error::Error;
};

/// A conditional (weak) value was requested for a postselection whose
/// probability is indistinguishable from zero.
class UndefinedPostselectionError : public Error {
  public:
    using Error::Error;
};

/// A numeric parameter is outside its admissible range.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Text input (files, CLI value strings) could not be parsed.
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace tripath

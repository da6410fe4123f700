// Copyright 2026 The su4geom Authors
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

#ifndef SU4GEOM_ERROR_HPP
#define SU4GEOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace su4geom {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Input failed validation (non-unitary matrix, malformed shape, bad number).
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// An internal cross-check failed (e.g. a residual exceeded its budget).
class ConsistencyError : public Error {
   public:
    using Error::Error;
};

/// Argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// A closed form was requested outside its range of validity.
class RangeError : public Error {
   public:
    using Error::Error;
};

/// Unknown enumerator, name or otherwise unusable argument.
class ArgumentError : public Error {
   public:
    using Error::Error;
};

/// Pointwise evaluation at a singularity of a density.
class SingularityError : public Error {
   public:
    using Error::Error;
};

/// Makhlin invariants that do not come from any two-qubit gate.
class InvalidInvariantsError : public Error {
   public:
    using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
   public:
    using Error::Error;
};

}  // namespace su4geom

#endif

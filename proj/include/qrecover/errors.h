// Copyright 2026 The qrecover Authors
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

#ifndef QRECOVER_ERRORS_H
#define QRECOVER_ERRORS_H

#include <stdexcept>
#include <string>

namespace qrecover {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible (matmul, channel application, partial trace...).
struct DimensionError : Error {
    using Error::Error;
};

/// A numerical precondition (hermiticity, orthonormality, positivity, ...) is violated
/// beyond tolerance. Carries the measured residual so callers can report it.
struct ToleranceError : Error {
    ToleranceError(const std::string &what, double residual) : Error(what), residual_(residual) {
    }
    double residual() const noexcept {
        return residual_;
    }

   private:
    double residual_;
};

struct NotHermitianError : ToleranceError {
    using ToleranceError::ToleranceError;
};

struct NotIsometryError : ToleranceError {
    using ToleranceError::ToleranceError;
};

struct NotUnitaryError : ToleranceError {
    using ToleranceError::ToleranceError;
};

struct InvalidStateError : ToleranceError {
    using ToleranceError::ToleranceError;
};

/// The code does not satisfy the Knill-Laflamme condition for the channel.
struct NotCorrectableError : ToleranceError {
    using ToleranceError::ToleranceError;
};

/// The ancilla state is numerically singular so its inverse square root does not exist.
struct SingularAncillaError : ToleranceError {
    using ToleranceError::ToleranceError;
};

/// A new Kraus operator's action on the code is not spanned by the plan's error operators.
struct SpanMembershipError : ToleranceError {
    using ToleranceError::ToleranceError;
};

/// Invalid scalar argument such as a negative probability.
struct InvalidArgumentError : Error {
    using Error::Error;
};

/// Malformed input document.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace qrecover

#endif

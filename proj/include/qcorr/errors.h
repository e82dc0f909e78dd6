// Copyright 2026 The qcorr Authors
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

#ifndef QCORR_ERRORS_H
#define QCORR_ERRORS_H

#include <stdexcept>
#include <string>

namespace qcorr {

/// Raised when a caller hands in data that violates an operation's
/// precondition (wrong dimensions, non-Hermitian observable, invalid state).
struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string &what) : std::invalid_argument(what) {
    }
};

/// Raised when a computation on valid input cannot be completed to the
/// required accuracy (eigensolver stall, probability mass lost).
struct NumericalFailure : std::runtime_error {
    explicit NumericalFailure(const std::string &what) : std::runtime_error(what) {
    }
};

}  // namespace qcorr

#endif

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

#ifndef QCORR_VALIDATE_H
#define QCORR_VALIDATE_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qcorr {

/// One invariant checked over many random instances.
struct InvariantCheck {
    std::string name;
    std::size_t dim = 0;
    std::size_t instances = 0;
    /// Largest residual seen; for lower-bound checks (eigenvalues,
    /// probabilities) the smallest value seen.
    double worst = 0;
    double threshold = 0;
    bool lower_bound = false;
    bool passed = true;
};

struct ValidationReport {
    std::vector<InvariantCheck> checks;

    bool passed() const;
};

/// Runs every module invariant on `instances` random instances per
/// dimension. Thresholds are multiplied by `tolerance_scale`.
ValidationReport run_validation(const std::vector<std::size_t> &dims, std::size_t instances, std::uint64_t seed,
                                double tolerance_scale = 1.0);

}  // namespace qcorr

#endif

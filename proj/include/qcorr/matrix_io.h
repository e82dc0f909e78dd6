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

#ifndef QCORR_MATRIX_IO_H
#define QCORR_MATRIX_IO_H

#include <cstddef>
#include <optional>
#include <string>

#include "json.hpp"
#include "qcorr/channels.h"
#include "qcorr/linalg.h"

namespace qcorr {

/// On-disk matrix document:
///
///     {"dim_in": 2, "dim_out": 2, "matrix": [[[re, im], ...], ...]}
///
/// Without `dim_out` the matrix is dim_in x dim_in (a state or observable).
/// With it, the matrix is the (dim_out*dim_in)-sided Choi matrix of a map.
struct MatrixFile {
    std::size_t dim_in = 0;
    std::optional<std::size_t> dim_out;
    ComplexMatrix matrix{1, 1};
};

nlohmann::json matrix_to_json(const ComplexMatrix &m);
/// Any rectangular nested array of [re, im] pairs.
ComplexMatrix matrix_from_json(const nlohmann::json &j);

nlohmann::json to_json(const MatrixFile &file);
MatrixFile matrix_file_from_json(const nlohmann::json &j);
MatrixFile parse_matrix_file(const std::string &text);
MatrixFile read_matrix_file(const std::string &path);

MatrixFile matrix_file_for(const LinearMap &map);
LinearMap map_from_file(const MatrixFile &file);

}  // namespace qcorr

#endif

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

#include "qcorr/matrix_io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qcorr/errors.h"

namespace qcorr {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); c++) {
            row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json &j) {
    if (!j.is_array() || j.empty()) {
        throw InvalidInput("matrix must be a non-empty array of rows");
    }
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) {
        throw InvalidInput("matrix rows must be non-empty arrays");
    }
    const std::size_t cols = j[0].size();
    ComplexVector entries;
    entries.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; r++) {
        const json &row = j[r];
        if (!row.is_array() || row.size() != cols) {
            throw InvalidInput("matrix row " + std::to_string(r) + " does not have " + std::to_string(cols) +
                               " entries");
        }
        for (std::size_t c = 0; c < cols; c++) {
            const json &z = row[c];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw InvalidInput("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                                   ") must be a [re, im] number pair");
            }
            entries.emplace_back(z[0].get<double>(), z[1].get<double>());
        }
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

json to_json(const MatrixFile &file) {
    json j;
    j["dim_in"] = file.dim_in;
    if (file.dim_out) {
        j["dim_out"] = *file.dim_out;
    }
    j["matrix"] = matrix_to_json(file.matrix);
    return j;
}

namespace {

std::size_t read_dim(const json &j, const char *key) {
    const json &v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw InvalidInput(std::string(key) + " must be a positive integer");
    }
    return v.get<std::size_t>();
}

}  // namespace

MatrixFile matrix_file_from_json(const json &j) {
    if (!j.is_object() || !j.contains("dim_in") || !j.contains("matrix")) {
        throw InvalidInput("matrix file needs an object with keys dim_in and matrix");
    }
    MatrixFile file;
    file.dim_in = read_dim(j, "dim_in");
    if (j.contains("dim_out")) {
        file.dim_out = read_dim(j, "dim_out");
    }
    file.matrix = matrix_from_json(j.at("matrix"));
    const std::size_t side = file.dim_in * file.dim_out.value_or(1);
    if (file.matrix.rows() != side || file.matrix.cols() != side) {
        throw InvalidInput("matrix is " + std::to_string(file.matrix.rows()) + "x" +
                           std::to_string(file.matrix.cols()) + " but the declared dimensions require " +
                           std::to_string(side) + "x" + std::to_string(side));
    }
    return file;
}

MatrixFile parse_matrix_file(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw InvalidInput(std::string("malformed matrix file: ") + e.what());
    }
    return matrix_file_from_json(j);
}

MatrixFile read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_matrix_file(buf.str());
    } catch (const InvalidInput &e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

MatrixFile matrix_file_for(const LinearMap &map) {
    return {map.dim_in(), map.dim_out(), map.choi()};
}

LinearMap map_from_file(const MatrixFile &file) {
    if (!file.dim_out) {
        throw InvalidInput("map file needs dim_out");
    }
    return LinearMap(file.dim_in, *file.dim_out, file.matrix);
}

}  // namespace qcorr

/**
 * Copyright 2026 bunchkit contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bunchkit/numkit/matrix_io.hpp"

#include <fstream>
#include <stdexcept>

namespace bunchkit {

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& v : m.data()) entries.push_back({v.real(), v.imag()});
    j["entries"] = std::move(entries);
    return j;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("matrix json: need rows, cols, entries");
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols)
        throw std::invalid_argument("matrix json: entries must hold rows*cols [re,im] pairs");
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("matrix json: entry " + std::to_string(i) +
                                        " is not an [re, im] pair");
        m.data()[i] = Complex(e[0].get<double>(), e[1].get<double>());
    }
    m.check_finite("matrix json");
    return m;
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_matrix: cannot open " + path);
    nlohmann::json j;
    in >> j;
    return matrix_from_json(j);
}

void save_matrix(const ComplexMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_matrix: cannot open " + path);
    out << matrix_to_json(m).dump(2) << "\n";
}

}  // namespace bunchkit

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

#ifndef BUNCHKIT_NUMKIT_MATRIX_IO_HPP
#define BUNCHKIT_NUMKIT_MATRIX_IO_HPP

#include <string>

#include <json.hpp>

#include "bunchkit/numkit/complex_matrix.hpp"

namespace bunchkit {

/// Matrix file schema: {"rows": R, "cols": C, "entries": [[re, im], ...]} row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix load_matrix(const std::string& path);
void save_matrix(const ComplexMatrix& m, const std::string& path);

}  // namespace bunchkit

#endif

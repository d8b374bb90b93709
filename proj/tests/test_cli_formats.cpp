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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bunchkit/numkit/matrix_io.hpp"
#include "bunchkit/protocol/assess.hpp"

using namespace bunchkit;

TEST_CASE("matrix file round-trip through disk") {
    ComplexMatrix m(2, 3);
    m(0, 0) = Complex(1.0, -2.0);
    m(1, 2) = Complex(0.25, 0.5);
    const std::string path = "test_matrix_io_tmp.json";
    save_matrix(m, path);
    const ComplexMatrix back = load_matrix(path);
    CHECK(back.max_abs_diff(m) == 0.0);
    std::remove(path.c_str());
}

TEST_CASE("assessment report json schema") {
    AssessmentReport rep;
    rep.record.runs = 100;
    rep.record.bunched_count = 37;
    rep.record.master_seed = 99;
    rep.predicted = 0.4;
    rep.band_lo = 0.25;
    rep.band_hi = 0.55;
    rep.empirical = 0.37;
    rep.verdict = Verdict::Pass;
    const auto j = rep.to_json("standard");
    CHECK(j.at("protocol") == "standard");
    CHECK(j.at("runs") == 100);
    CHECK(j.at("bunched") == 37);
    CHECK(j.at("predicted") == doctest::Approx(0.4));
    CHECK(j.at("band")[0] == doctest::Approx(0.25));
    CHECK(j.at("band")[1] == doctest::Approx(0.55));
    CHECK(j.at("verdict") == "PASS");
    CHECK(j.at("seed") == 99);
}

TEST_CASE("verdict names") {
    CHECK(std::string(verdict_name(Verdict::Pass)) == "PASS");
    CHECK(std::string(verdict_name(Verdict::Fail)) == "FAIL");
    CHECK(std::string(verdict_name(Verdict::Inconclusive)) == "INCONCLUSIVE");
}

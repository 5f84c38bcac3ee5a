// Copyright 2026 The cliffdepth Authors
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

#include "cliffdepth/depth_bounds.h"

#include <cmath>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

using namespace cliffdepth;

TEST(depth_bounds, family_names_round_trip) {
    for (auto f : {Family::Cz, Family::CzBasic, Family::Cnot, Family::CnotReordering, Family::Clifford}) {
        ASSERT_EQ(parse_family(family_name(f)), f);
    }
    ASSERT_FALSE(parse_family("toffoli").has_value());
}

TEST(depth_bounds, prior_art_values) {
    ASSERT_EQ(prior_art_bound(Family::Cz, 4), 3u);
    ASSERT_EQ(prior_art_bound(Family::Cz, 5), 5u);
    ASSERT_EQ(prior_art_bound(Family::Cnot, 64), 128u);
    ASSERT_EQ(prior_art_bound(Family::Cnot, 1024), 1445u);
    ASSERT_THROW(prior_art_bound(Family::Cz, 1), std::invalid_argument);
}

TEST(depth_bounds, recursion_relations) {
    for (std::size_t n = 2; n < 3000; ++n) {
        ASSERT_EQ(recursion_bound(Family::CnotReordering, n) + 6, recursion_bound(Family::Cnot, n));
        ASSERT_LE(recursion_bound(Family::Cz, n), recursion_bound(Family::CzBasic, n));
    }
}

TEST(depth_bounds, table_matches_recursion) {
    auto t = DepthTable::fill(Family::Cz, 500);
    ASSERT_EQ(t.values.size(), 501u);
    for (std::size_t n = 1; n <= 500; ++n) {
        ASSERT_EQ(t.at(n), recursion_bound(Family::Cz, n));
    }
}

TEST(depth_bounds, closed_forms_hold) {
    for (auto f : {Family::Cz, Family::CzBasic, Family::Cnot, Family::CnotReordering, Family::Clifford}) {
        auto report = validate_closed_form(f, closed_form(f));
        ASSERT_TRUE(report.ok()) << family_name(f) << " first violation " << report.violations.front();
        ASSERT_EQ(report.checked, report.n_hi - report.n_lo + 1);
        ASSERT_GE(report.min_slack, 0);
    }
}

TEST(depth_bounds, formula_evaluate) {
    BoundFormula f{1.0, 0.0, 0.0, 0.5, 1, 10};
    ASSERT_EQ(f.evaluate(3), 3);
    BoundFormula g{0.0, 1.0, 0.0, 0.0, 1, 10};
    ASSERT_EQ(g.evaluate(8), 9);
}

TEST(depth_bounds, crossovers) {
    auto r = crossover_scan(20000);
    EXPECT_EQ(r.cnot_first_beat, 56u);
    EXPECT_EQ(r.cnot_stable, 70u);
    EXPECT_EQ(r.prior_internal, 85u);
    EXPECT_EQ(r.prior_internal_real_log, 75u);
    EXPECT_EQ(r.cz_stable, 39u);
    EXPECT_EQ(r.clifford_stable, 43u);
}

TEST(depth_bounds, asymptotic_ratio) {
    std::size_t n = 100000;
    double ratio = static_cast<double>(closed_form(Family::Cz).evaluate(n)) /
                   static_cast<double>(prior_art_bound(Family::Cz, n));
    ASSERT_LT(ratio, 0.55);
}

TEST(depth_bounds, csv_rows) {
    std::ostringstream out;
    emit_comparison_csv(Family::Cnot, 2, 100, out);
    std::istringstream in(out.str());
    std::string line;
    std::size_t rows = 0;
    std::getline(in, line);
    ASSERT_EQ(line.rfind("n,", 0), 0u);
    while (std::getline(in, line)) {
        ++rows;
    }
    ASSERT_EQ(rows, 99u);
}

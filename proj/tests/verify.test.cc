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

#include "cliffdepth/verify.h"

#include "gtest/gtest.h"

#include "cliffdepth/random.h"
#include "cliffdepth/tableau.h"

using namespace cliffdepth;

TEST(verify, linear_action_of_cnot) {
    auto r = linear_action(Circuit(2, {Gate::cnot(0, 1)}));
    ASSERT_EQ(r, BitMatrix::from_strings({"10", "11"}));
}

TEST(verify, linear_action_order) {
    Circuit c(3, {Gate::cnot(0, 1), Gate::cnot(1, 2)});
    ASSERT_EQ(linear_action(c), BitMatrix::from_strings({"100", "110", "111"}));
}

TEST(verify, linear_action_rejects_other_gates) {
    ASSERT_THROW(linear_action(Circuit(2, {Gate::h(0)})), OracleError);
}

TEST(verify, empty_circuit) {
    ASSERT_TRUE(linear_action(Circuit(4)).is_identity());
    auto phases = phase_oracle(Circuit(3));
    ASSERT_EQ(phases.size(), 8u);
    for (bool p : phases) {
        ASSERT_FALSE(p);
    }
}

TEST(verify, phase_of_single_cz) {
    auto phases = phase_oracle(Circuit(2, {Gate::cz(0, 1)}));
    ASSERT_EQ(phases, (std::vector<bool>{false, false, false, true}));
}

TEST(verify, cnot_conjugated_cz) {
    Circuit c(3, {Gate::cnot(0, 1), Gate::cz(1, 2), Gate::cnot(0, 1)});
    Circuit expect(3, {Gate::cz(0, 2), Gate::cz(1, 2)});
    ASSERT_EQ(phase_oracle(c), phase_oracle(expect));
}

TEST(verify, phase_oracle_limits) {
    ASSERT_THROW(phase_oracle(Circuit(kMaxPhaseOracleQubits + 1)), OracleError);
    ASSERT_THROW(phase_oracle(Circuit(2, {Gate::cnot(0, 1)})), OracleError);
    ASSERT_THROW(phase_oracle(Circuit(2, {Gate::h(0)})), OracleError);
}

TEST(verify, expected_phases_match_literal) {
    Rng rng(61);
    for (int t = 0; t < 30; ++t) {
        auto spec = random_cz_spec(1 + rng.below(9), rng);
        ASSERT_EQ(phase_oracle(spec.literal_circuit()), expected_cz_phases(spec));
    }
}

TEST(verify, tableaux_equal_checks_phases) {
    auto a = tableau_of_circuit(Circuit(1, {Gate::x(0)}));
    auto b = CliffordTableau::identity(1);
    ASSERT_FALSE(tableaux_equal(a, b));
    ASSERT_TRUE(tableaux_equal(b, b));
    ASSERT_THROW(tableaux_equal(b, CliffordTableau::identity(2)), DimensionError);
}

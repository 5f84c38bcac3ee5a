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

#include "cliffdepth/cnot_synth.h"

#include <algorithm>

#include "gtest/gtest.h"

#include "cliffdepth/depth_bounds.h"
#include "cliffdepth/random.h"
#include "cliffdepth/tableau.h"
#include "cliffdepth/verify.h"
#include "test_util.h"

using namespace cliffdepth;
using cliffdepth::testing::block_upper_matrix;

namespace {

bool only_cnots(const Circuit &c) {
    return std::all_of(c.gates().begin(), c.gates().end(), [](const Gate &g) { return g.kind == GateKind::CNOT; });
}

/// Tableau of the basis map x -> r x.
CliffordTableau linear_tableau(const BitMatrix &r) {
    return tableau_of_circuit(Circuit(r.rows(), remove_hadamards(synth_linear(r, SynthMode::Exact).circuit).gates()));
}

}  // namespace

TEST(cnot_synth, triangular_identity_is_empty) {
    ASSERT_TRUE(synth_triangular(BitMatrix::identity(9)).empty());
}

TEST(cnot_synth, triangular_two_qubits) {
    auto c = synth_triangular(BitMatrix::from_strings({"11", "01"}));
    ASSERT_EQ(two_qubit_depth(c), 1u);
    ASSERT_EQ(linear_action(c), BitMatrix::from_strings({"11", "01"}));
}

TEST(cnot_synth, triangular_three_qubits_all_patterns) {
    for (int mask = 0; mask < 8; ++mask) {
        BitMatrix u = BitMatrix::identity(3);
        u.set(0, 1, mask & 1);
        u.set(0, 2, mask & 2);
        u.set(1, 2, mask & 4);
        auto c = synth_triangular(u);
        ASSERT_LE(two_qubit_depth(c), 2u);
        ASSERT_EQ(linear_action(c), u);
    }
}

TEST(cnot_synth, triangular_rejects_bad_input) {
    ASSERT_THROW(synth_triangular(BitMatrix::from_strings({"10", "11"})), std::invalid_argument);
    ASSERT_THROW(synth_triangular(BitMatrix::from_strings({"11", "00"})), SingularMatrixError);
}

TEST(cnot_synth, triangular_random_depth_and_action) {
    Rng rng(41);
    for (std::size_t n = 1; n <= 80; ++n) {
        auto u = random_upper_unitriangular(n, rng);
        auto c = synth_triangular(u);
        ASSERT_LE(two_qubit_depth(c), cnot_depth_recursion(n)) << n;
        auto flat = remove_hadamards(c);
        ASSERT_EQ(linear_action(flat), u) << n;
    }
}

TEST(cnot_synth, recursion_values) {
    ASSERT_EQ(cnot_depth_recursion(1), 0u);
    ASSERT_EQ(cnot_depth_recursion(2), 1u);
    ASSERT_EQ(cnot_depth_recursion(3), 2u);
    ASSERT_EQ(cnot_depth_recursion(4), 3u);
    ASSERT_THROW(cnot_depth_recursion(0), std::out_of_range);
}

TEST(cnot_synth, block_upper_depth_six) {
    auto l = block_upper_matrix();
    auto c = synth_triangular(l);
    ASSERT_EQ(two_qubit_depth(c), 6u);
    auto flat = remove_hadamards(c);
    ASSERT_TRUE(only_cnots(flat));
    ASSERT_EQ(two_qubit_depth(flat), 6u);
    ASSERT_EQ(linear_action(flat), l);
    ASSERT_LT(two_qubit_depth(flat), 7u);

    auto lin = synth_linear(l, SynthMode::Exact);
    ASSERT_EQ(two_qubit_depth(lin.circuit), 6u);
}

TEST(cnot_synth, linear_identity) {
    auto r = synth_linear(BitMatrix::identity(5), SynthMode::Exact);
    ASSERT_TRUE(r.circuit.empty());
    ASSERT_TRUE(r.output_perm.is_identity());
}

TEST(cnot_synth, linear_pure_permutation) {
    Rng rng(42);
    auto p = random_permutation(12, rng);
    auto m = p.apply_to_rows(BitMatrix::identity(12));
    auto exact = synth_linear(m, SynthMode::Exact);
    ASSERT_LE(two_qubit_depth(exact.circuit), 6u);
    ASSERT_EQ(linear_action(exact.circuit), m);
    auto loose = synth_linear(m, SynthMode::UpToReordering);
    ASSERT_TRUE(loose.circuit.empty());
    ASSERT_EQ(loose.output_perm, p);
}

TEST(cnot_synth, linear_random_actions) {
    Rng rng(43);
    for (std::size_t n : {2, 3, 5, 8, 16, 33, 64, 128}) {
        auto r = random_invertible(n, rng);
        auto exact = synth_linear(r, SynthMode::Exact);
        ASSERT_EQ(linear_action(remove_hadamards(exact.circuit)), r) << n;
        auto loose = synth_linear(r, SynthMode::UpToReordering);
        auto action = linear_action(remove_hadamards(loose.circuit));
        ASSERT_EQ(loose.output_perm.apply_to_rows(action), r) << n;
        ASSERT_LE(two_qubit_depth(exact.circuit), two_qubit_depth(loose.circuit) + 6) << n;
        ASSERT_LE(two_qubit_depth(loose.circuit), 2 * cnot_depth_recursion(n)) << n;
    }
}

TEST(cnot_synth, linear_singular_rejected) {
    ASSERT_THROW(synth_linear(BitMatrix::from_strings({"11", "11"}), SynthMode::Exact), SingularMatrixError);
}

TEST(cnot_synth, linear_with_hadamards_matches_tableau) {
    Rng rng(44);
    auto r = random_invertible(20, rng);
    auto with_h = synth_linear(r, SynthMode::Exact).circuit;
    ASSERT_EQ(tableau_of_circuit(with_h), linear_tableau(r));
}

TEST(cnot_synth, remove_hadamards_no_h_unchanged) {
    Circuit c(3, {Gate::cnot(0, 1), Gate::cnot(2, 0)});
    ASSERT_EQ(remove_hadamards(c), c);
}

TEST(cnot_synth, remove_hadamards_rules) {
    Circuit c(2, {Gate::h(0), Gate::h(1), Gate::cnot(0, 1), Gate::h(0), Gate::h(1)});
    ASSERT_EQ(remove_hadamards(c), Circuit(2, {Gate::cnot(1, 0)}));
    Circuit d(2, {Gate::h(1), Gate::cz(0, 1), Gate::h(1)});
    ASSERT_EQ(remove_hadamards(d), Circuit(2, {Gate::cnot(0, 1)}));
}

TEST(cnot_synth, remove_hadamards_rejects_bad_structure) {
    ASSERT_THROW(remove_hadamards(Circuit(2, {Gate::h(0)})), HadamardStructureError);
    ASSERT_THROW(remove_hadamards(Circuit(2, {Gate::cz(0, 1)})), HadamardStructureError);
    ASSERT_THROW(remove_hadamards(Circuit(2, {Gate::h(0), Gate::cnot(0, 1), Gate::h(0)})), HadamardStructureError);
    ASSERT_THROW(remove_hadamards(Circuit(1, {Gate::p(0)})), HadamardStructureError);
}

TEST(cnot_synth, remove_hadamards_preserves_metrics) {
    Rng rng(45);
    for (std::size_t n : {16, 64}) {
        auto c = synth_linear(random_invertible(n, rng), SynthMode::Exact).circuit;
        auto flat = remove_hadamards(c);
        ASSERT_TRUE(only_cnots(flat));
        ASSERT_EQ(two_qubit_gate_count(flat), two_qubit_gate_count(c));
        ASSERT_EQ(two_qubit_depth(flat), two_qubit_depth(c));
        ASSERT_EQ(tableau_of_circuit(flat), tableau_of_circuit(c));
    }
}

TEST(cnot_synth, exact_bound_on_sampled_sizes) {
    Rng rng(46);
    auto formula = closed_form(Family::Cnot);
    for (std::size_t n : {70, 100, 150}) {
        auto exact = synth_linear(random_invertible(n, rng), SynthMode::Exact).circuit;
        ASSERT_LE(static_cast<long long>(two_qubit_depth(exact)), formula.evaluate(n)) << n;
    }
}

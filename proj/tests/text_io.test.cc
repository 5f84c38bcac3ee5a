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

#include "cliffdepth/text_io.h"

#include <sstream>

#include "gtest/gtest.h"

#include "cliffdepth/random.h"

using namespace cliffdepth;

TEST(text_io, matrix_round_trip) {
    Rng rng(81);
    auto m = random_matrix(5, 7, rng);
    std::stringstream s;
    write_matrix(s, m);
    ASSERT_EQ(read_matrix(s), m);
}

TEST(text_io, matrix_parse_errors) {
    std::istringstream ragged("101\n10\n");
    ASSERT_THROW(read_matrix(ragged), ParseError);
    std::istringstream bad("1x1\n");
    ASSERT_THROW(read_matrix(bad), ParseError);
}

TEST(text_io, circuit_round_trip) {
    Rng rng(82);
    auto c = random_clifford_circuit(6, 40, rng);
    std::stringstream s;
    write_circuit(s, c);
    auto f = read_circuit(s);
    ASSERT_EQ(f.circuit, c);
    ASSERT_FALSE(f.perm.has_value());
}

TEST(text_io, circuit_with_perm) {
    Rng rng(83);
    auto p = random_permutation(6, rng);
    std::stringstream s;
    write_circuit(s, Circuit(6, {Gate::cnot(0, 5)}), p);
    auto f = read_circuit(s);
    ASSERT_EQ(f.perm, p);
}

TEST(text_io, circuit_parse_errors) {
    std::istringstream no_header("cx 0 1\n");
    ASSERT_THROW(read_circuit(no_header), ParseError);
    std::istringstream bad_gate("qubits 2\nccx 0 1\n");
    ASSERT_THROW(read_circuit(bad_gate), ParseError);
    std::istringstream range("qubits 2\ncz 0 2\n");
    ASSERT_THROW(read_circuit(range), ParseError);
}

TEST(text_io, tableau_round_trip) {
    Rng rng(84);
    auto t = random_tableau(5, rng);
    std::stringstream s;
    write_tableau(s, t);
    ASSERT_EQ(read_tableau(s), t);
}

TEST(text_io, qasm_output) {
    std::ostringstream s;
    write_qasm2(s, Circuit(2, {Gate::h(0), Gate::cnot(0, 1), Gate::cz(1, 0), Gate::p(1)}));
    auto text = s.str();
    ASSERT_NE(text.find("OPENQASM 2.0;"), std::string::npos);
    ASSERT_NE(text.find("qreg q[2];"), std::string::npos);
    ASSERT_NE(text.find("cx q[0],q[1];"), std::string::npos);
    ASSERT_NE(text.find("cz q[0],q[1];"), std::string::npos);
    ASSERT_NE(text.find("s q[1];"), std::string::npos);
}

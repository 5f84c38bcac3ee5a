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

#include <cstdint>
#include <string>

namespace cliffdepth {

BitMatrix linear_action(const Circuit &c) {
    if (c.qubit_count() == 0) {
        throw DimensionError("linear_action needs at least one qubit");
    }
    // Row q holds the output label of qubit q as a function of the input bits.
    BitMatrix r = BitMatrix::identity(c.qubit_count());
    for (const auto &g : c.gates()) {
        if (g.kind != GateKind::CNOT) {
            throw OracleError("linear_action: non-CNOT gate " + std::string(gate_name(g.kind)));
        }
        r.xor_row_into(g.q0, g.q1);
    }
    return r;
}

std::vector<bool> phase_oracle(const Circuit &c) {
    std::size_t n = c.qubit_count();
    if (n > kMaxPhaseOracleQubits) {
        throw OracleError("phase_oracle supports at most 12 qubits, got " + std::to_string(n));
    }
    for (const auto &g : c.gates()) {
        if (g.kind == GateKind::H || g.kind == GateKind::P) {
            throw OracleError("phase_oracle: gate " + std::string(gate_name(g.kind)) + " is not a signed permutation");
        }
    }
    std::size_t states = std::size_t{1} << n;
    std::vector<bool> out(states);
    for (std::uint32_t x = 0; x < states; ++x) {
        std::uint32_t label = x;
        bool minus = false;
        for (const auto &g : c.gates()) {
            bool b0 = (label >> g.q0) & 1U;
            bool b1 = (label >> g.q1) & 1U;
            switch (g.kind) {
                case GateKind::CZ:
                    minus ^= b0 && b1;
                    break;
                case GateKind::CNOT:
                    if (b0) {
                        label ^= 1U << g.q1;
                    }
                    break;
                case GateKind::X:
                    label ^= 1U << g.q0;
                    break;
                case GateKind::Z:
                    minus ^= b0;
                    break;
                default:
                    break;
            }
        }
        if (label != x) {
            throw OracleError("phase_oracle: circuit is not diagonal (basis state " + std::to_string(x) + " moves)");
        }
        out[x] = minus;
    }
    return out;
}

std::vector<bool> expected_cz_phases(const CzSpec &spec) {
    std::size_t n = spec.n();
    if (n > kMaxPhaseOracleQubits) {
        throw OracleError("expected_cz_phases supports at most 12 qubits");
    }
    std::vector<bool> out(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < out.size(); ++x) {
        bool minus = false;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                minus ^= spec.upper().get(i, j) && ((x >> i) & 1U) && ((x >> j) & 1U);
            }
        }
        out[x] = minus;
    }
    return out;
}

bool tableaux_equal(const CliffordTableau &a, const CliffordTableau &b) {
    if (a.n() != b.n()) {
        throw DimensionError("tableaux_equal: sizes differ");
    }
    return a == b;
}

}  // namespace cliffdepth

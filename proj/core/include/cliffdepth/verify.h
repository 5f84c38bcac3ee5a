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

#ifndef CLIFFDEPTH_VERIFY_H
#define CLIFFDEPTH_VERIFY_H

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cliffdepth/circuit.h"
#include "cliffdepth/cz_synth.h"
#include "cliffdepth/gf2.h"
#include "cliffdepth/tableau.h"

namespace cliffdepth {

struct OracleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Matrix R with the circuit mapping |x> to |R x>. CNOT gates only.
/// linear_action(compose(a, b)) == mat_mul(linear_action(b), linear_action(a)).
BitMatrix linear_action(const Circuit &c);

inline constexpr std::size_t kMaxPhaseOracleQubits = 12;

/// Entry x is true iff the circuit maps |x> to -|x>. Accepts CZ, CNOT, X and
/// Z gates on at most 12 qubits and requires the net basis action to be the identity.
std::vector<bool> phase_oracle(const Circuit &c);

/// Entry x is true iff sum over set (i, j) of x_i x_j is odd.
std::vector<bool> expected_cz_phases(const CzSpec &spec);

bool tableaux_equal(const CliffordTableau &a, const CliffordTableau &b);

}  // namespace cliffdepth

#endif

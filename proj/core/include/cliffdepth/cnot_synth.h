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

#ifndef CLIFFDEPTH_CNOT_SYNTH_H
#define CLIFFDEPTH_CNOT_SYNTH_H

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cliffdepth/circuit.h"
#include "cliffdepth/gf2.h"

namespace cliffdepth {

// Linear reversible maps act on basis labels as x -> R x (column vectors);
// a circuit implements R when every basis state |x> ends as |R x>.

enum class SynthMode : std::uint8_t { Exact, UpToReordering };

/// Circuit over {CNOT, CZ, H} on `qubits` (qubit qubits[i] carries row i of
/// `u`) implementing the upper unitriangular `u`.
std::vector<Gate> synth_triangular_gates(const BitMatrix &u, const std::vector<Qubit> &qubits);
Circuit synth_triangular(const BitMatrix &u);

struct LinearSynthesis {
    Circuit circuit;
    /// Row i of the target map ends up on qubit output_perm[i]; identity in Exact mode.
    Permutation output_perm;
};

LinearSynthesis synth_linear(const BitMatrix &r, SynthMode mode);

struct HadamardStructureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Rewrites a {CNOT, CZ, H} circuit whose H gates conjugate CZ blocks into an
/// equivalent CNOT-only circuit with the same two-qubit gates count and depth.
Circuit remove_hadamards(const Circuit &c);

/// Minimum of the plain-coloring and halving branches; 1 <= n <= kMaxTableN.
std::size_t cnot_depth_recursion(std::size_t n);
/// The plain-coloring branch alone.
std::size_t cnot_coloring_recursion(std::size_t n);

}  // namespace cliffdepth

#endif

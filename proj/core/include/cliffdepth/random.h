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

#ifndef CLIFFDEPTH_RANDOM_H
#define CLIFFDEPTH_RANDOM_H

#include <cstddef>
#include <cstdint>
#include <random>

#include "cliffdepth/circuit.h"
#include "cliffdepth/cz_synth.h"
#include "cliffdepth/gf2.h"
#include "cliffdepth/tableau.h"

namespace cliffdepth {

/// Portable seeded generator: std::mt19937_64 (its output sequence is fixed
/// by the C++ standard) with hand-rolled derivations instead of the
/// implementation-defined std distributions.
///   bit()      = top bit of the next 64-bit output
///   below(k)   = next output modulo k
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    std::uint64_t next() {
        return engine_();
    }
    bool bit() {
        return (engine_() >> 63) != 0;
    }
    std::uint64_t below(std::uint64_t k) {
        return engine_() % k;
    }

   private:
    std::mt19937_64 engine_;
};

/// Fisher-Yates: for i from n-1 down to 1 swap entries i and below(i+1).
Permutation random_permutation(std::size_t n, Rng &rng);

/// L * P * U with random unit triangular L, U (each off-diagonal entry one
/// bit(), row-major) and a random permutation matrix P.
BitMatrix random_invertible(std::size_t n, Rng &rng);

/// Random unit upper triangular matrix.
BitMatrix random_upper_unitriangular(std::size_t n, Rng &rng);

/// Each entry one bit(), row-major.
BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng &rng);

/// Each (i < j) entry one bit(), row-major.
CzSpec random_cz_spec(std::size_t n, Rng &rng);

/// Each gate: kind = below(6) over {CZ, CNOT, H, P, X, Z}; then one or two
/// distinct qubits via below(n). Two-qubit kinds are redrawn when n == 1.
Circuit random_clifford_circuit(std::size_t n, std::size_t length, Rng &rng);

/// Tableau of random_clifford_circuit(n, 10 n).
CliffordTableau random_tableau(std::size_t n, Rng &rng);

}  // namespace cliffdepth

#endif

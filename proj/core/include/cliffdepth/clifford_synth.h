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

#ifndef CLIFFDEPTH_CLIFFORD_SYNTH_H
#define CLIFFDEPTH_CLIFFORD_SYNTH_H

#include <cstddef>
#include <vector>

#include "cliffdepth/circuit.h"
#include "cliffdepth/cz_synth.h"
#include "cliffdepth/gf2.h"
#include "cliffdepth/tableau.h"

namespace cliffdepth {

/// Stages in time order: X, Z, P, CX, CZ, H, CZ, H, P.
struct CliffordLayers {
    std::vector<bool> x_mask;
    std::vector<bool> z_mask;
    std::vector<bool> p1_mask;
    BitMatrix cx;  // basis action x -> cx * x
    CzSpec cz1;
    std::vector<bool> h_mask1;
    CzSpec cz2;
    std::vector<bool> h_mask2;
    std::vector<bool> p2_mask;
};

CliffordLayers decompose_tableau(const CliffordTableau &t);

/// Straightforward circuit for the layers (Gaussian-elimination CNOTs, one
/// CZ per spec entry).
Circuit layers_to_circuit(const CliffordLayers &layers);

/// CNOT circuit for `r` by plain Gaussian elimination.
Circuit naive_cnot_circuit(const BitMatrix &r);

/// Depth saved by folding the leading CNOTs of the first CZ stage into the CX stage.
std::size_t merge_saving(std::size_t n);

Circuit synth_clifford(const CliffordTableau &t);

}  // namespace cliffdepth

#endif

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

#ifndef CLIFFDEPTH_M01_H
#define CLIFFDEPTH_M01_H

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cliffdepth/circuit.h"
#include "cliffdepth/gf2.h"
#include "cliffdepth/rectangle.h"

namespace cliffdepth {

// A k x m CZ pattern between qubit lists A (rows) and B (columns) is a plain
// BitMatrix: entry (i, j) set iff CZ(a_i, b_j) is wanted.

struct HalvingResult {
    BitMatrix reduced;
    std::vector<bool> row_flips;  // A'
    std::vector<bool> col_flips;  // B'
    std::size_t flips = 0;
    std::size_t inspections = 0;
    std::vector<std::size_t> weight_trace;  // total weight before the first flip and after each flip
};

/// Greedy line flipping until every row has weight <= floor(m/2) and every
/// column weight <= floor(k/2). Lines are visited rows first, then columns,
/// and flipped only on a strict decrease.
HalvingResult halve_weights(const BitMatrix &pattern);

using ColorClass = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Proper edge coloring of the bipartite graph with adjacency `pattern`
/// using exactly max-degree colors (alternating-path recoloring).
std::vector<ColorClass> color_bipartite_edges(const BitMatrix &pattern);

/// As color_bipartite_edges, but requires a halved pattern (row weights <=
/// floor(m/2), column weights <= floor(k/2)) and throws PreconditionError otherwise.
std::vector<ColorClass> bipartite_edge_color(const BitMatrix &pattern);

/// One CZ layer per color class of `pattern`.
std::vector<Gate> coloring_gates(const QubitSet &a, const QubitSet &b, const BitMatrix &pattern);

/// Pattern synthesis split so callers can fold the leading CNOTs into a
/// neighbouring linear stage: `prefix` is CNOT-only, and prefix + rest
/// implements the pattern.
struct M01Parts {
    std::vector<Gate> prefix;
    std::vector<Gate> rest;

    std::vector<Gate> gates() const;
};

M01Parts m01_parts(const QubitSet &a, const QubitSet &b, const BitMatrix &pattern);

/// Depth <= max(floor(k/2), floor(m/2)) + 2*max(ceil_log2 k, ceil_log2 m) when max(k, m) >= 2.
Circuit synth_m01(const QubitSet &a, const QubitSet &b, const BitMatrix &pattern, std::size_t qubit_count);

}  // namespace cliffdepth

#endif

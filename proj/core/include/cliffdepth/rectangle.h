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

#ifndef CLIFFDEPTH_RECTANGLE_H
#define CLIFFDEPTH_RECTANGLE_H

#include <cstddef>
#include <vector>

#include "cliffdepth/circuit.h"

namespace cliffdepth {

/// Non-empty ordered list of distinct qubits.
class QubitSet {
   public:
    explicit QubitSet(std::vector<Qubit> qubits);

    const std::vector<Qubit> &qubits() const noexcept { return qubits_; }
    std::size_t size() const noexcept { return qubits_.size(); }
    Qubit operator[](std::size_t i) const noexcept { return qubits_[i]; }
    Qubit back() const noexcept { return qubits_.back(); }

   private:
    std::vector<Qubit> qubits_;
};

/// Smallest d with 2^d >= x (x >= 1).
std::size_t ceil_log2(std::size_t x) noexcept;

/// CNOT fan-in computing the XOR of a set into its last element.
struct ParityTree {
    std::vector<std::vector<Gate>> layers;  // each layer is disjoint
    Qubit representative;

    std::size_t depth() const noexcept { return layers.size(); }
    std::vector<Gate> gates() const;
};

/// Pairs adjacent live qubits each layer (the right one of a pair keeps the
/// running XOR), so the depth is exactly ceil(log2 |s|).
ParityTree parity_tree(const QubitSet &s);

/// All-pairs CZ between `a` and `b` as three consecutive gate runs. `prefix`
/// holds only CNOTs (the trees up to the rewritten middle), `middle` the CZs
/// that replace the last tree layer and the central CZ, and `suffix` undoes
/// `prefix`.
struct RectangleParts {
    std::vector<Gate> prefix;
    std::vector<Gate> middle;
    std::vector<Gate> suffix;

    std::vector<Gate> gates() const;
};

RectangleParts rectangle_parts(const QubitSet &a, const QubitSet &b);

/// Circuit over `qubit_count` qubits equal to the product of CZ(x, y) for all
/// x in a, y in b. Depth is 1 when |a| = |b| = 1 and
/// 2*max(ceil_log2|a|, ceil_log2|b|) otherwise.
Circuit synth_rectangle(const QubitSet &a, const QubitSet &b, std::size_t qubit_count);

}  // namespace cliffdepth

#endif

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

#ifndef CLIFFDEPTH_CIRCUIT_H
#define CLIFFDEPTH_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cliffdepth {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t { CZ, CNOT, H, P, X, Z };

std::string_view gate_name(GateKind kind) noexcept;

/// One gate. For CNOT `q0` is the control and `q1` the target; CZ is stored
/// with q0 < q1. Single-qubit gates only use `q0`.
struct Gate {
    GateKind kind;
    Qubit q0;
    Qubit q1;

    static Gate cz(Qubit a, Qubit b);
    static Gate cnot(Qubit control, Qubit target);
    static Gate h(Qubit q) { return {GateKind::H, q, q}; }
    static Gate p(Qubit q) { return {GateKind::P, q, q}; }
    static Gate x(Qubit q) { return {GateKind::X, q, q}; }
    static Gate z(Qubit q) { return {GateKind::Z, q, q}; }

    bool two_qubit() const noexcept { return kind == GateKind::CZ || kind == GateKind::CNOT; }
    bool operator==(const Gate &) const = default;
};

/// An ordered gate list on a fixed number of qubits. Gates act left to right.
class Circuit {
   public:
    explicit Circuit(std::size_t qubit_count) : qubit_count_(qubit_count) {}
    Circuit(std::size_t qubit_count, std::vector<Gate> gates);

    std::size_t qubit_count() const noexcept { return qubit_count_; }
    const std::vector<Gate> &gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }

    void append(const Gate &g);
    void append(std::span<const Gate> gs);
    void append(const Circuit &other);

    bool operator==(const Circuit &) const = default;

   private:
    std::size_t qubit_count_;
    std::vector<Gate> gates_;
};

/// ASAP depth counting only CZ and CNOT; single-qubit gates are free.
std::size_t two_qubit_depth(const Circuit &c);
std::size_t two_qubit_depth(std::span<const Gate> gates, std::size_t qubit_count);
std::size_t two_qubit_gate_count(const Circuit &c);

Circuit compose(const Circuit &a, const Circuit &b);

/// Inverse circuit: reversed order, P replaced by P·P·P, everything else self-inverse.
Circuit invert(const Circuit &c);

/// Removes pairs of equal H, X or Z gates on one qubit with no gate on that qubit in between.
Circuit cancel_single_qubit_pairs(const Circuit &c);

}  // namespace cliffdepth

#endif

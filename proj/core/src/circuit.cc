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

#include "cliffdepth/circuit.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffdepth/gf2.h"

namespace cliffdepth {

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
        case GateKind::CZ:
            return "CZ";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::H:
            return "H";
        case GateKind::P:
            return "P";
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
    }
    return "?";
}

Gate Gate::cz(Qubit a, Qubit b) {
    if (a == b) {
        throw std::invalid_argument("CZ needs two distinct qubits");
    }
    return {GateKind::CZ, std::min(a, b), std::max(a, b)};
}

Gate Gate::cnot(Qubit control, Qubit target) {
    if (control == target) {
        throw std::invalid_argument("CNOT needs two distinct qubits");
    }
    return {GateKind::CNOT, control, target};
}

Circuit::Circuit(std::size_t qubit_count, std::vector<Gate> gates) : qubit_count_(qubit_count) {
    gates_.reserve(gates.size());
    append(gates);
}

void Circuit::append(const Gate &g) {
    if (g.q0 >= qubit_count_ || g.q1 >= qubit_count_) {
        throw std::out_of_range(
            std::string(gate_name(g.kind)) + " acts on a qubit outside 0.." +
            std::to_string(qubit_count_ == 0 ? 0 : qubit_count_ - 1));
    }
    if (g.two_qubit() && g.q0 == g.q1) {
        throw std::invalid_argument("two-qubit gate on a single qubit");
    }
    gates_.push_back(g.kind == GateKind::CZ ? Gate::cz(g.q0, g.q1) : g);
}

void Circuit::append(std::span<const Gate> gs) {
    for (const auto &g : gs) {
        append(g);
    }
}

void Circuit::append(const Circuit &other) {
    if (other.qubit_count_ != qubit_count_) {
        throw DimensionError("appending a circuit with a different qubit count");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

std::size_t two_qubit_depth(std::span<const Gate> gates, std::size_t qubit_count) {
    std::vector<std::size_t> level(qubit_count, 0);
    std::size_t depth = 0;
    for (const auto &g : gates) {
        if (!g.two_qubit()) {
            continue;
        }
        std::size_t t = std::max(level[g.q0], level[g.q1]) + 1;
        level[g.q0] = t;
        level[g.q1] = t;
        depth = std::max(depth, t);
    }
    return depth;
}

std::size_t two_qubit_depth(const Circuit &c) {
    return two_qubit_depth(c.gates(), c.qubit_count());
}

std::size_t two_qubit_gate_count(const Circuit &c) {
    return static_cast<std::size_t>(
        std::count_if(c.gates().begin(), c.gates().end(), [](const Gate &g) { return g.two_qubit(); }));
}

Circuit compose(const Circuit &a, const Circuit &b) {
    if (a.qubit_count() != b.qubit_count()) {
        throw DimensionError("compose: qubit counts differ");
    }
    Circuit out = a;
    out.append(b);
    return out;
}

Circuit cancel_single_qubit_pairs(const Circuit &c) {
    const auto &gates = c.gates();
    std::vector<bool> keep(gates.size(), true);
    std::vector<std::vector<std::size_t>> open(c.qubit_count());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate &g = gates[i];
        bool self_inverse = g.kind == GateKind::H || g.kind == GateKind::X || g.kind == GateKind::Z;
        auto &stack = open[g.q0];
        if (self_inverse && !stack.empty() && gates[stack.back()] == g) {
            keep[stack.back()] = false;
            keep[i] = false;
            stack.pop_back();
            continue;
        }
        stack.push_back(i);
        if (g.two_qubit()) {
            open[g.q1].push_back(i);
        }
    }
    Circuit out(c.qubit_count());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (keep[i]) {
            out.append(gates[i]);
        }
    }
    return out;
}

Circuit invert(const Circuit &c) {
    Circuit out(c.qubit_count());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
        if (it->kind == GateKind::P) {
            out.append(*it);
            out.append(*it);
        }
        out.append(*it);
    }
    return out;
}

}  // namespace cliffdepth

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

#include "cliffdepth/cnot_synth.h"

#include <algorithm>
#include <mutex>
#include <string>

#include "cliffdepth/cz_synth.h"
#include "cliffdepth/m01.h"
#include "cliffdepth/rectangle.h"

namespace cliffdepth {

namespace {

struct CnotTables {
    std::vector<std::uint32_t> full;
    std::vector<std::uint32_t> coloring;
};

const CnotTables &cnot_tables() {
    static CnotTables tables;
    static std::once_flag once;
    std::call_once(once, [] {
        std::size_t size = kMaxTableN + 1;
        tables.full.assign(size, 0);
        tables.coloring.assign(size, 0);
        for (std::size_t n = 1; n < size && n <= 3; ++n) {
            tables.full[n] = tables.coloring[n] = static_cast<std::uint32_t>(n - 1);
        }
        for (std::size_t n = 4; n < size; ++n) {
            std::size_t h = (n + 1) / 2;
            std::size_t d = tables.full[h];
            tables.full[n] = static_cast<std::uint32_t>(std::min(d + h, d + h / 2 + 2 * ceil_log2(h)));
            tables.coloring[n] = static_cast<std::uint32_t>(tables.coloring[h] + h);
        }
    });
    return tables;
}

void check_table_n(std::size_t n) {
    if (n < 1 || n > kMaxTableN) {
        throw std::out_of_range("recursion table covers 1.." + std::to_string(kMaxTableN) + ", got " + std::to_string(n));
    }
}

void emit_triangular(const BitMatrix &u, const std::vector<Qubit> &qs, std::vector<Gate> &out) {
    std::size_t s = qs.size();
    if (s == 1) {
        return;
    }
    if (s == 2) {
        if (u.get(0, 1)) {
            out.push_back(Gate::cnot(qs[1], qs[0]));
        }
        return;
    }
    if (s == 3) {
        if (u.get(0, 1) && u.get(0, 2) && u.get(1, 2)) {
            out.push_back(Gate::cnot(qs[2], qs[1]));
            out.push_back(Gate::cnot(qs[1], qs[0]));
            return;
        }
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j) {
                if (u.get(i, j)) {
                    out.push_back(Gate::cnot(qs[j], qs[i]));
                }
            }
        }
        return;
    }

    std::size_t h = (s + 1) / 2;
    std::size_t rest = s - h;
    BitMatrix ra = u.block(0, 0, h, h);
    BitMatrix rb = u.block(h, h, rest, rest);
    BitMatrix x = mat_mul(mat_inverse(ra), u.block(0, h, h, rest));
    std::vector<Qubit> a(qs.begin(), qs.begin() + static_cast<std::ptrdiff_t>(h));
    std::vector<Qubit> b(qs.begin() + static_cast<std::ptrdiff_t>(h), qs.end());

    if (!x.is_zero()) {
        QubitSet sa(a);
        QubitSet sb(b);
        std::vector<Gate> plain = coloring_gates(sa, sb, x);
        std::vector<Gate> halved = m01_parts(sa, sb, x).gates();
        Qubit top = *std::max_element(qs.begin(), qs.end());
        std::size_t width = static_cast<std::size_t>(top) + 1;
        const std::vector<Gate> &stage =
            two_qubit_depth(halved, width) < two_qubit_depth(plain, width) ? halved : plain;
        for (Qubit q : a) {
            out.push_back(Gate::h(q));
        }
        out.insert(out.end(), stage.begin(), stage.end());
        for (Qubit q : a) {
            out.push_back(Gate::h(q));
        }
    }
    emit_triangular(ra, a, out);
    emit_triangular(rb, b, out);
}

}  // namespace

std::size_t cnot_depth_recursion(std::size_t n) {
    check_table_n(n);
    return cnot_tables().full[n];
}

std::size_t cnot_coloring_recursion(std::size_t n) {
    check_table_n(n);
    return cnot_tables().coloring[n];
}

std::vector<Gate> synth_triangular_gates(const BitMatrix &u, const std::vector<Qubit> &qubits) {
    if (!u.square() || u.rows() != qubits.size()) {
        throw DimensionError("synth_triangular: matrix size does not match the qubit list");
    }
    if (!u.is_upper_triangular()) {
        throw std::invalid_argument("synth_triangular: matrix is not upper triangular");
    }
    for (std::size_t i = 0; i < u.rows(); ++i) {
        if (!u.get(i, i)) {
            throw SingularMatrixError("synth_triangular: zero on the diagonal");
        }
    }
    QubitSet checked(qubits);
    std::vector<Gate> out;
    emit_triangular(u, checked.qubits(), out);
    return out;
}

Circuit synth_triangular(const BitMatrix &u) {
    std::vector<Qubit> qs(u.rows());
    for (std::size_t i = 0; i < qs.size(); ++i) {
        qs[i] = static_cast<Qubit>(i);
    }
    return Circuit(u.rows(), synth_triangular_gates(u, qs));
}

LinearSynthesis synth_linear(const BitMatrix &r, SynthMode mode) {
    if (!r.square()) {
        throw DimensionError("synth_linear needs a square matrix");
    }
    std::size_t n = r.rows();
    LuDecomposition lu = lu_decompose(r);

    std::vector<Qubit> forward(n);
    std::vector<Qubit> backward(n);
    for (std::size_t i = 0; i < n; ++i) {
        forward[i] = static_cast<Qubit>(i);
        backward[i] = static_cast<Qubit>(n - 1 - i);
    }
    BitMatrix reversed_lower(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (lu.lower.get(n - 1 - i, n - 1 - j)) {
                reversed_lower.set(i, j, true);
            }
        }
    }

    Circuit c(n, synth_triangular_gates(lu.upper, forward));
    c.append(synth_triangular_gates(reversed_lower, backward));

    if (mode == SynthMode::UpToReordering) {
        return {std::move(c), lu.perm};
    }
    for (const auto &layer : perm_to_transposition_layers(lu.perm)) {
        for (auto [a, b] : layer) {
            c.append(Gate::cnot(a, b));
            c.append(Gate::cnot(b, a));
            c.append(Gate::cnot(a, b));
        }
    }
    return {std::move(c), Permutation::identity(n)};
}

Circuit remove_hadamards(const Circuit &c) {
    std::vector<bool> frame(c.qubit_count(), false);
    Circuit out(c.qubit_count());
    for (const auto &g : c.gates()) {
        switch (g.kind) {
            case GateKind::H:
                frame[g.q0] = !frame[g.q0];
                break;
            case GateKind::CNOT:
                if (frame[g.q0] != frame[g.q1]) {
                    throw HadamardStructureError("CNOT with exactly one end inside an H frame");
                }
                out.append(frame[g.q0] ? Gate::cnot(g.q1, g.q0) : g);
                break;
            case GateKind::CZ:
                if (frame[g.q0] == frame[g.q1]) {
                    throw HadamardStructureError("CZ not straddling an H frame boundary");
                }
                out.append(frame[g.q0] ? Gate::cnot(g.q1, g.q0) : Gate::cnot(g.q0, g.q1));
                break;
            default:
                throw HadamardStructureError(std::string("unsupported gate ") + std::string(gate_name(g.kind)));
        }
    }
    for (std::size_t q = 0; q < frame.size(); ++q) {
        if (frame[q]) {
            throw HadamardStructureError("H frame left open on qubit " + std::to_string(q));
        }
    }
    return out;
}

}  // namespace cliffdepth

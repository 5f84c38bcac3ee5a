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

#include "cliffdepth/clifford_synth.h"

#include <stdexcept>

#include "cliffdepth/cnot_synth.h"
#include "cliffdepth/rectangle.h"
#include "cliffdepth/verify.h"

namespace cliffdepth {

namespace {

void append_mask(Circuit &c, const std::vector<bool> &mask, Gate (*make)(Qubit)) {
    for (std::size_t q = 0; q < mask.size(); ++q) {
        if (mask[q]) {
            c.append(make(static_cast<Qubit>(q)));
        }
    }
}

/// Symmetric zero-diagonal matrix to CzSpec (upper half).
CzSpec spec_from_symmetric(const BitMatrix &g) {
    CzSpec spec(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (g.get(i, i)) {
            throw std::logic_error("CZ layer matrix has a nonzero diagonal");
        }
        for (std::size_t j = i + 1; j < g.cols(); ++j) {
            if (g.get(i, j) != g.get(j, i)) {
                throw std::logic_error("CZ layer matrix is not symmetric");
            }
            if (g.get(i, j)) {
                spec.set(static_cast<Qubit>(i), static_cast<Qubit>(j), true);
            }
        }
    }
    return spec;
}

}  // namespace

Circuit naive_cnot_circuit(const BitMatrix &r) {
    if (!r.square()) {
        throw DimensionError("naive_cnot_circuit needs a square matrix");
    }
    std::size_t n = r.rows();
    BitMatrix m = r;
    // Row operations E_k ... E_1 r = I give r = E_1 ... E_k, i.e. the gates
    // of E_k act first.
    std::vector<Gate> ops;
    auto add = [&](std::size_t src, std::size_t dst) {
        m.xor_row_into(src, dst);
        ops.push_back(Gate::cnot(static_cast<Qubit>(src), static_cast<Qubit>(dst)));
    };
    for (std::size_t col = 0; col < n; ++col) {
        if (!m.get(col, col)) {
            std::size_t p = col + 1;
            while (p < n && !m.get(p, col)) {
                ++p;
            }
            if (p == n) {
                throw SingularMatrixError("naive_cnot_circuit: matrix is singular");
            }
            add(p, col);
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row != col && m.get(row, col)) {
                add(col, row);
            }
        }
    }
    return Circuit(n, std::vector<Gate>(ops.rbegin(), ops.rend()));
}

CliffordLayers decompose_tableau(const CliffordTableau &t) {
    std::size_t n = t.n();
    BitMatrix sym = t.symplectic();
    if (!is_symplectic(sym)) {
        throw std::invalid_argument("decompose_tableau: input is not symplectic");
    }

    // Images of the Z generators span a Lagrangian subspace.
    BitMatrix zrows = sym.block(n, 0, n, 2 * n);

    // Final P layer: make x.z vanish on the whole subspace.
    BitMatrix xpart = zrows.block(0, 0, n, n);
    std::vector<bool> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        bool v = false;
        for (std::size_t j = 0; j < n; ++j) {
            v ^= zrows.get(i, j) && zrows.get(i, n + j);
        }
        q[i] = v;
    }
    std::vector<bool> d;
    if (!solve(xpart, q, d)) {
        throw std::logic_error("decompose_tableau: phase-layer system is inconsistent");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (d[j] && zrows.get(i, j)) {
                zrows.flip(i, n + j);
            }
        }
    }

    // Final H layer: qubits outside the pivot columns of the x part.
    std::vector<bool> pivot(n, false);
    {
        BitMatrix e = zrows.block(0, 0, n, n);
        std::size_t row = 0;
        for (std::size_t col = 0; col < n && row < n; ++col) {
            std::size_t p = row;
            while (p < n && !e.get(p, col)) {
                ++p;
            }
            if (p == n) {
                continue;
            }
            e.swap_rows(p, row);
            for (std::size_t r = 0; r < n; ++r) {
                if (r != row && e.get(r, col)) {
                    e.xor_row_into(row, r);
                }
            }
            pivot[col] = true;
            ++row;
        }
    }
    std::vector<bool> h2(n);
    for (std::size_t j = 0; j < n; ++j) {
        h2[j] = !pivot[j];
        if (h2[j]) {
            for (std::size_t i = 0; i < n; ++i) {
                bool xv = zrows.get(i, j);
                bool zv = zrows.get(i, n + j);
                zrows.set(i, j, zv);
                zrows.set(i, n + j, xv);
            }
        }
    }

    // Now the x part is invertible; reduce to [I | G].
    BitMatrix xinv = mat_inverse(zrows.block(0, 0, n, n));
    BitMatrix g2 = mat_mul(xinv, zrows.block(0, n, n, n));
    CzSpec cz2 = spec_from_symmetric(g2);

    // Peel the trailing H(all) CZ H P stages off to leave [[A, B], [0, A^-T]].
    Circuit tail_inverse(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (d[j]) {
            for (int k = 0; k < 3; ++k) {
                tail_inverse.append(Gate::p(static_cast<Qubit>(j)));
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (h2[j]) {
            tail_inverse.append(Gate::h(static_cast<Qubit>(j)));
        }
    }
    tail_inverse.append(cz2.literal_circuit());
    for (std::size_t j = 0; j < n; ++j) {
        tail_inverse.append(Gate::h(static_cast<Qubit>(j)));
    }
    CliffordTableau front = t;
    front.apply(tail_inverse);
    BitMatrix f = front.symplectic();
    if (!f.block(n, 0, n, n).is_zero()) {
        throw std::logic_error("decompose_tableau: residual block is not zero");
    }
    BitMatrix a = f.block(0, 0, n, n);
    BitMatrix b = f.block(0, n, n, n);
    BitMatrix abt = mat_mul(a, b.transpose());
    std::vector<bool> p1(n);
    for (std::size_t j = 0; j < n; ++j) {
        p1[j] = abt.get(j, j);
        if (p1[j]) {
            abt.flip(j, j);
        }
    }
    BitMatrix ainv = mat_inverse(a);
    BitMatrix g1 = mat_mul(mat_mul(ainv, abt), ainv.transpose());

    CliffordLayers layers{
        std::vector<bool>(n, false),
        std::vector<bool>(n, false),
        p1,
        a.transpose(),
        spec_from_symmetric(g1),
        std::vector<bool>(n, true),
        std::move(cz2),
        h2,
        d,
    };

    // Signs: a leading X_j flips the Z_j row, a leading Z_j flips the X_j row.
    CliffordTableau bare = tableau_of_circuit(layers_to_circuit(layers));
    if (bare.symplectic() != sym) {
        throw std::logic_error("decompose_tableau: recomposed symplectic part differs");
    }
    for (std::size_t j = 0; j < n; ++j) {
        layers.z_mask[j] = bare.phase(j) != t.phase(j);
        layers.x_mask[j] = bare.phase(n + j) != t.phase(n + j);
    }
    return layers;
}

Circuit layers_to_circuit(const CliffordLayers &layers) {
    std::size_t n = layers.cx.rows();
    Circuit c(n);
    append_mask(c, layers.x_mask, &Gate::x);
    append_mask(c, layers.z_mask, &Gate::z);
    append_mask(c, layers.p1_mask, &Gate::p);
    c.append(naive_cnot_circuit(layers.cx));
    c.append(layers.cz1.literal_circuit());
    append_mask(c, layers.h_mask1, &Gate::h);
    c.append(layers.cz2.literal_circuit());
    append_mask(c, layers.h_mask2, &Gate::h);
    append_mask(c, layers.p2_mask, &Gate::p);
    return c;
}

std::size_t merge_saving(std::size_t n) {
    if (n < 4) {
        return 0;
    }
    std::size_t h = (n + 1) / 2;
    switch (cz_strategy_for(n)) {
        case CzStrategy::OneStep:
            return ceil_log2(h) - 1;
        case CzStrategy::TwoStep:
            return ceil_log2((h + 1) / 2);
        default:
            return 0;
    }
}

Circuit synth_clifford(const CliffordTableau &t) {
    CliffordLayers layers = decompose_tableau(t);
    std::size_t n = t.n();
    Circuit c(n);
    append_mask(c, layers.x_mask, &Gate::x);
    append_mask(c, layers.z_mask, &Gate::z);
    append_mask(c, layers.p1_mask, &Gate::p);

    CzParts cz1 = synth_cz_parts(layers.cz1);
    BitMatrix folded = mat_mul(linear_action(Circuit(n, cz1.prefix)), layers.cx);
    c.append(synth_linear(folded, SynthMode::Exact).circuit);
    c.append(std::span<const Gate>(cz1.rest));

    append_mask(c, layers.h_mask1, &Gate::h);
    c.append(synth_cz(layers.cz2));
    append_mask(c, layers.h_mask2, &Gate::h);
    append_mask(c, layers.p2_mask, &Gate::p);
    return cancel_single_qubit_pairs(c);
}

}  // namespace cliffdepth

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

#include "cliffdepth/random.h"

#include <numeric>
#include <utility>

namespace cliffdepth {

Permutation random_permutation(std::size_t n, Rng &rng) {
    std::vector<std::uint32_t> map(n);
    std::iota(map.begin(), map.end(), 0U);
    for (std::size_t i = n; i-- > 1;) {
        std::swap(map[i], map[rng.below(i + 1)]);
    }
    return Permutation(std::move(map));
}

BitMatrix random_upper_unitriangular(std::size_t n, Rng &rng) {
    BitMatrix u = BitMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            u.set(i, j, rng.bit());
        }
    }
    return u;
}

BitMatrix random_invertible(std::size_t n, Rng &rng) {
    BitMatrix lower = random_upper_unitriangular(n, rng).transpose();
    Permutation p = random_permutation(n, rng);
    BitMatrix upper = random_upper_unitriangular(n, rng);
    return mat_mul(lower, p.apply_to_rows(upper));
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng &rng) {
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m.set(i, j, rng.bit());
        }
    }
    return m;
}

CzSpec random_cz_spec(std::size_t n, Rng &rng) {
    CzSpec spec(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.bit()) {
                spec.set(static_cast<Qubit>(i), static_cast<Qubit>(j), true);
            }
        }
    }
    return spec;
}

Circuit random_clifford_circuit(std::size_t n, std::size_t length, Rng &rng) {
    Circuit c(n);
    while (c.size() < length) {
        auto kind = static_cast<GateKind>(rng.below(6));
        bool two = kind == GateKind::CZ || kind == GateKind::CNOT;
        if (two && n < 2) {
            continue;
        }
        auto a = static_cast<Qubit>(rng.below(n));
        if (!two) {
            c.append(Gate{kind, a, a});
            continue;
        }
        auto b = static_cast<Qubit>(rng.below(n - 1));
        if (b >= a) {
            ++b;
        }
        c.append(kind == GateKind::CZ ? Gate::cz(a, b) : Gate::cnot(a, b));
    }
    return c;
}

CliffordTableau random_tableau(std::size_t n, Rng &rng) {
    return tableau_of_circuit(random_clifford_circuit(n, 10 * n, rng));
}

}  // namespace cliffdepth

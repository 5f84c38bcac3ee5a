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

#include "cliffdepth/tableau.h"

#include <bit>
#include <stdexcept>
#include <string>

namespace cliffdepth {

namespace {

using word_t = BitMatrix::word_t;

/// Pauli i^k X^x Z^z with bit-packed x and z.
struct PauliProduct {
    std::vector<word_t> x;
    std::vector<word_t> z;
    unsigned k = 0;

    explicit PauliProduct(std::size_t words) : x(words, 0), z(words, 0) {
    }

    void mul_right(std::span<const word_t> x2, std::span<const word_t> z2, unsigned k2) {
        unsigned cross = 0;
        for (std::size_t w = 0; w < x.size(); ++w) {
            cross += static_cast<unsigned>(std::popcount(z[w] & x2[w]));
        }
        k = (k + k2 + 2 * cross) & 3U;
        for (std::size_t w = 0; w < x.size(); ++w) {
            x[w] ^= x2[w];
            z[w] ^= z2[w];
        }
    }
};

unsigned overlap(std::span<const word_t> a, std::span<const word_t> b) {
    unsigned c = 0;
    for (std::size_t w = 0; w < a.size(); ++w) {
        c += static_cast<unsigned>(std::popcount(a[w] & b[w]));
    }
    return c;
}

}  // namespace

CliffordTableau::CliffordTableau(std::size_t n) : n_(n), columns_(2 * n, 2 * n), signs_(1, 2 * n) {
}

CliffordTableau CliffordTableau::identity(std::size_t n) {
    CliffordTableau t(n);
    t.columns_ = BitMatrix::identity(2 * n);
    return t;
}

CliffordTableau::CliffordTableau(BitMatrix symplectic, std::vector<bool> phases)
    : n_(symplectic.rows() / 2), columns_(1, 1), signs_(1, 1) {
    if (!symplectic.square() || symplectic.rows() % 2 != 0) {
        throw DimensionError("tableau matrix must be 2n x 2n");
    }
    if (phases.size() != symplectic.rows()) {
        throw DimensionError("tableau needs one phase bit per row");
    }
    if (!is_symplectic(symplectic)) {
        throw std::invalid_argument("tableau matrix is not symplectic");
    }
    columns_ = symplectic.transpose();
    signs_ = BitMatrix(1, 2 * n_);
    for (std::size_t r = 0; r < phases.size(); ++r) {
        signs_.set(0, r, phases[r]);
    }
}

std::vector<bool> CliffordTableau::phases() const {
    std::vector<bool> out(2 * n_);
    for (std::size_t r = 0; r < out.size(); ++r) {
        out[r] = signs_.get(0, r);
    }
    return out;
}

void CliffordTableau::apply(const Gate &g) {
    if (g.q0 >= n_ || g.q1 >= n_) {
        throw std::out_of_range("gate acts outside the tableau");
    }
    auto r = signs_.row(0);
    std::size_t words = r.size();
    switch (g.kind) {
        case GateKind::H: {
            auto xa = columns_.row(g.q0);
            auto za = columns_.row(n_ + g.q0);
            for (std::size_t w = 0; w < words; ++w) {
                r[w] ^= xa[w] & za[w];
                std::swap(xa[w], za[w]);
            }
            break;
        }
        case GateKind::P: {
            auto xa = columns_.row(g.q0);
            auto za = columns_.row(n_ + g.q0);
            for (std::size_t w = 0; w < words; ++w) {
                r[w] ^= xa[w] & za[w];
                za[w] ^= xa[w];
            }
            break;
        }
        case GateKind::CNOT: {
            auto xa = columns_.row(g.q0);
            auto za = columns_.row(n_ + g.q0);
            auto xb = columns_.row(g.q1);
            auto zb = columns_.row(n_ + g.q1);
            for (std::size_t w = 0; w < words; ++w) {
                r[w] ^= xa[w] & zb[w] & ~(xb[w] ^ za[w]);
                xb[w] ^= xa[w];
                za[w] ^= zb[w];
            }
            break;
        }
        case GateKind::CZ: {
            auto xa = columns_.row(g.q0);
            auto za = columns_.row(n_ + g.q0);
            auto xb = columns_.row(g.q1);
            auto zb = columns_.row(n_ + g.q1);
            for (std::size_t w = 0; w < words; ++w) {
                r[w] ^= xa[w] & xb[w] & (za[w] ^ zb[w]);
                za[w] ^= xb[w];
                zb[w] ^= xa[w];
            }
            break;
        }
        case GateKind::X: {
            auto za = columns_.row(n_ + g.q0);
            for (std::size_t w = 0; w < words; ++w) {
                r[w] ^= za[w];
            }
            break;
        }
        case GateKind::Z: {
            auto xa = columns_.row(g.q0);
            for (std::size_t w = 0; w < words; ++w) {
                r[w] ^= xa[w];
            }
            break;
        }
    }
}

void CliffordTableau::apply(const Circuit &c) {
    if (c.qubit_count() != n_) {
        throw DimensionError("circuit and tableau sizes differ");
    }
    for (const auto &g : c.gates()) {
        apply(g);
    }
}

CliffordTableau CliffordTableau::then(const CliffordTableau &next) const {
    if (next.n_ != n_) {
        throw DimensionError("composing tableaux of different sizes");
    }
    BitMatrix mine = symplectic();
    BitMatrix theirs = next.symplectic();
    std::size_t rows = 2 * n_;
    // Row form split into separate x and z bit vectors.
    auto split = [this](const BitMatrix &m, std::size_t row, std::vector<word_t> &xs, std::vector<word_t> &zs) {
        std::size_t words = (n_ + BitMatrix::kWordBits - 1) / BitMatrix::kWordBits;
        xs.assign(words, 0);
        zs.assign(words, 0);
        for (std::size_t q = 0; q < n_; ++q) {
            if (m.get(row, q)) {
                xs[q / BitMatrix::kWordBits] |= word_t{1} << (q % BitMatrix::kWordBits);
            }
            if (m.get(row, n_ + q)) {
                zs[q / BitMatrix::kWordBits] |= word_t{1} << (q % BitMatrix::kWordBits);
            }
        }
    };
    std::vector<std::vector<word_t>> nx(rows), nz(rows);
    std::vector<unsigned> nk(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        split(theirs, r, nx[r], nz[r]);
        nk[r] = (2U * (next.phase(r) ? 1U : 0U) + overlap(nx[r], nz[r])) & 3U;
    }

    std::size_t words = nx.empty() ? 0 : nx[0].size();
    BitMatrix out_sym(rows, rows);
    std::vector<bool> out_phase(rows);
    std::vector<word_t> gx, gz;
    for (std::size_t r = 0; r < rows; ++r) {
        split(mine, r, gx, gz);
        PauliProduct acc(words);
        acc.k = (2U * (phase(r) ? 1U : 0U) + overlap(gx, gz)) & 3U;
        for (std::size_t q = 0; q < n_; ++q) {
            if (mine.get(r, q)) {
                acc.mul_right(nx[q], nz[q], nk[q]);
            }
        }
        for (std::size_t q = 0; q < n_; ++q) {
            if (mine.get(r, n_ + q)) {
                acc.mul_right(nx[n_ + q], nz[n_ + q], nk[n_ + q]);
            }
        }
        unsigned sign = (acc.k + 4U - (overlap(acc.x, acc.z) & 3U)) & 3U;
        if (sign % 2 != 0) {
            throw std::logic_error("tableau composition produced a non-Hermitian row");
        }
        out_phase[r] = sign == 2;
        for (std::size_t q = 0; q < n_; ++q) {
            bool xq = (acc.x[q / BitMatrix::kWordBits] >> (q % BitMatrix::kWordBits)) & 1U;
            bool zq = (acc.z[q / BitMatrix::kWordBits] >> (q % BitMatrix::kWordBits)) & 1U;
            out_sym.set(r, q, xq);
            out_sym.set(r, n_ + q, zq);
        }
    }
    return CliffordTableau(std::move(out_sym), std::move(out_phase));
}

bool is_symplectic(const BitMatrix &s) {
    if (!s.square() || s.rows() % 2 != 0) {
        return false;
    }
    std::size_t n = s.rows() / 2;
    BitMatrix swapped(2 * n, 2 * n);
    for (std::size_t r = 0; r < 2 * n; ++r) {
        for (std::size_t q = 0; q < n; ++q) {
            swapped.set(r, q, s.get(r, n + q));
            swapped.set(r, n + q, s.get(r, q));
        }
    }
    BitMatrix omega(2 * n, 2 * n);
    for (std::size_t q = 0; q < n; ++q) {
        omega.set(q, n + q, true);
        omega.set(n + q, q, true);
    }
    return mat_mul(swapped, s.transpose()) == omega;
}

CliffordTableau tableau_of_circuit(const Circuit &c) {
    CliffordTableau t = CliffordTableau::identity(c.qubit_count());
    t.apply(c);
    return t;
}

}  // namespace cliffdepth

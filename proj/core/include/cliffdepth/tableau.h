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

#ifndef CLIFFDEPTH_TABLEAU_H
#define CLIFFDEPTH_TABLEAU_H

#include <cstddef>
#include <vector>

#include "cliffdepth/circuit.h"
#include "cliffdepth/gf2.h"

namespace cliffdepth {

/// Conjugation action of an n-qubit Clifford on the Pauli generators.
///
/// Row j < n is the image of X_j and row n + j the image of Z_j. Each row is
/// [x_0..x_{n-1} | z_0..z_{n-1}] plus a sign bit; x_q = z_q = 1 denotes Y_q.
/// Gates act left to right, so the symplectic part of "a then b" is S_a * S_b.
class CliffordTableau {
   public:
    static CliffordTableau identity(std::size_t n);

    /// Validates shapes (2n x 2n and 2n phase bits) and the symplectic condition.
    CliffordTableau(BitMatrix symplectic, std::vector<bool> phases);

    std::size_t n() const noexcept { return n_; }
    /// Row-form 2n x 2n matrix.
    BitMatrix symplectic() const { return columns_.transpose(); }
    std::vector<bool> phases() const;
    bool x(std::size_t row, std::size_t q) const noexcept { return columns_.get(q, row); }
    bool z(std::size_t row, std::size_t q) const noexcept { return columns_.get(n_ + q, row); }
    bool phase(std::size_t row) const noexcept { return signs_.get(0, row); }

    /// Appends one gate (acting after everything already applied).
    void apply(const Gate &g);
    void apply(const Circuit &c);

    /// Tableau of "this, then next".
    CliffordTableau then(const CliffordTableau &next) const;

    bool operator==(const CliffordTableau &other) const = default;

   private:
    explicit CliffordTableau(std::size_t n);

    std::size_t n_;
    BitMatrix columns_;  // row c is tableau column c over all 2n tableau rows
    BitMatrix signs_;    // 1 x 2n
};

/// S * Omega * S^T == Omega with Omega = [[0, I], [I, 0]].
bool is_symplectic(const BitMatrix &s);

CliffordTableau tableau_of_circuit(const Circuit &c);

}  // namespace cliffdepth

#endif

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

#ifndef CLIFFDEPTH_CZ_SYNTH_H
#define CLIFFDEPTH_CZ_SYNTH_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cliffdepth/circuit.h"
#include "cliffdepth/gf2.h"

namespace cliffdepth {

/// Which CZ(i, j), i < j, an n-qubit diagonal layer applies. Stored as a
/// strictly upper triangular n x n matrix.
class CzSpec {
   public:
    explicit CzSpec(std::size_t n);

    /// Accepts a strictly upper triangular matrix, or a symmetric matrix with
    /// zero diagonal (only the upper half is kept).
    static CzSpec from_matrix(const BitMatrix &m);
    static CzSpec all_ones(std::size_t n);

    std::size_t n() const noexcept { return upper_.rows(); }
    const BitMatrix &upper() const noexcept { return upper_; }

    /// Symmetric lookup; false on the diagonal.
    bool has(Qubit a, Qubit b) const noexcept;
    void set(Qubit a, Qubit b, bool value);
    std::size_t gate_count() const noexcept { return upper_.weight(); }

    /// One CZ per set entry, in row-major order.
    Circuit literal_circuit() const;

    bool operator==(const CzSpec &) const = default;

   private:
    BitMatrix upper_;
};

enum class CzStrategy : std::uint8_t { Auto, ColoringBase, OneStep, TwoStep };

/// Complete-graph round-robin coloring restricted to the gates present.
Circuit synth_cz_coloring(const CzSpec &spec);

/// A CZ circuit split into a leading CNOT-only run and the remainder.
struct CzParts {
    std::vector<Gate> prefix;
    std::vector<Gate> rest;
    CzStrategy top = CzStrategy::ColoringBase;

    std::vector<Gate> gates() const;
};

/// `strategy` selects the top level only; deeper levels always follow the
/// recursion-table argmin. Sizes below 4 always use the coloring base case.
CzParts synth_cz_parts(const CzSpec &spec, CzStrategy strategy = CzStrategy::Auto);
Circuit synth_cz(const CzSpec &spec, CzStrategy strategy = CzStrategy::Auto);

inline constexpr std::size_t kMaxTableN = 1345000;

/// Minimum over coloring, one-step and two-step recursion; 1 <= n <= kMaxTableN.
std::size_t cz_depth_recursion(std::size_t n);
/// Same recursion without the two-step branch.
std::size_t cz_basic_recursion(std::size_t n);
/// Branch attaining cz_depth_recursion(n); ties go to the earlier branch.
CzStrategy cz_strategy_for(std::size_t n);

/// Depth of the three branches at size n >= 4 (using the table for smaller sizes).
std::size_t cz_coloring_depth(std::size_t n) noexcept;
std::size_t cz_one_step_depth(std::size_t n);
std::size_t cz_two_step_depth(std::size_t n);

}  // namespace cliffdepth

#endif

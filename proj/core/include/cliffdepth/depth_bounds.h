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

#ifndef CLIFFDEPTH_DEPTH_BOUNDS_H
#define CLIFFDEPTH_DEPTH_BOUNDS_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cliffdepth {

/// Cz: full CZ recursion. CzBasic: CZ recursion without the two-step branch.
/// Cnot / CnotReordering: linear reversible synthesis with / without the
/// final permutation. Clifford: the composed layered-form count.
enum class Family : std::uint8_t { Cz, CzBasic, Cnot, CnotReordering, Clifford };

std::string_view family_name(Family f) noexcept;
/// Accepts cz, cz-basic, cnot, cnot-perm, clifford.
std::optional<Family> parse_family(std::string_view name) noexcept;

/// Depth guaranteed by the recursions for size n:
///   Cz, CzBasic -> recursion value; Cnot -> 2 d(n) + 6; CnotReordering -> 2 d(n);
///   Clifford -> 2 cz(n) + 2 cnot(n) + 6 - merge_saving(n).
std::size_t recursion_bound(Family f, std::size_t n);

/// recursion_bound for every n in [0, n_max] (entry 0 unused).
struct DepthTable {
    Family family;
    std::vector<std::uint32_t> values;

    static DepthTable fill(Family f, std::size_t n_max);
    std::size_t at(std::size_t n) const { return values.at(n); }
    /// First n where values[n] < values[n - 1], if any.
    std::optional<std::size_t> first_decrease() const;
};

/// floor(linear*n + log2_coeff*log2(n)^2 + log_coeff*log2(n) + constant).
struct BoundFormula {
    double linear;
    double log2_coeff;
    double log_coeff;
    double constant;
    std::size_t n_lo;
    std::size_t n_hi;

    /// Values within 1e-6 of an integer are recomputed in long double.
    long long evaluate(std::size_t n) const;
    bool near_integer(std::size_t n) const;
};

BoundFormula closed_form(Family f);

/// Best previously known bound: CZ n-1 / n (even / odd); CNOT
/// min(2n, floor(4n/3 + 8 ceil(log2 n))); Clifford 2 * CZ + CNOT (a
/// reconstruction).
std::size_t prior_art_bound(Family f, std::size_t n);

struct ValidationReport {
    Family family;
    std::size_t n_lo = 0;
    std::size_t n_hi = 0;
    std::size_t checked = 0;
    std::vector<std::size_t> violations;
    long long min_slack = 0;
    long long max_slack = 0;
    std::vector<std::size_t> near_integer;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks formula.evaluate(n) >= recursion_bound(f, n) for every n in range.
ValidationReport validate_closed_form(Family f, const BoundFormula &formula);

/// n in [lo, hi] with the plain-coloring CNOT recursion above n + floor(log2(n-1)) - 2.
std::vector<std::size_t> first_branch_violations(std::size_t lo, std::size_t hi);

struct CrossoverReport {
    std::size_t cnot_first_beat = 0;
    std::size_t cnot_stable = 0;
    std::size_t prior_internal = 0;
    std::size_t prior_internal_real_log = 0;
    std::size_t cz_stable = 0;
    std::size_t clifford_stable = 0;
};

/// "Stable" values are the smallest n0 such that the inequality holds for
/// every n in [n0, scan_max]; "first" is the smallest n where it holds at all.
CrossoverReport crossover_scan(std::size_t scan_max);

/// Header then one row per n: n,prior,closed_form,recursion.
void emit_comparison_csv(Family f, std::size_t lo, std::size_t hi, std::ostream &out);

}  // namespace cliffdepth

#endif

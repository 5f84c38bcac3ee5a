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

#include "cliffdepth/cz_synth.h"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>
#include <string>

#include "cliffdepth/m01.h"
#include "cliffdepth/rectangle.h"

namespace cliffdepth {

CzSpec::CzSpec(std::size_t n) : upper_(n, n) {
}

CzSpec CzSpec::from_matrix(const BitMatrix &m) {
    if (!m.square()) {
        throw DimensionError("CZ spec matrix must be square");
    }
    CzSpec spec(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m.get(i, i)) {
            throw std::invalid_argument("CZ spec matrix has a nonzero diagonal entry at " + std::to_string(i));
        }
    }
    bool lower_used = !m.is_upper_triangular();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            if (lower_used && m.get(i, j) != m.get(j, i)) {
                throw std::invalid_argument("CZ spec matrix is neither strictly upper triangular nor symmetric");
            }
            if (m.get(i, j)) {
                spec.upper_.set(i, j, true);
            }
        }
    }
    return spec;
}

CzSpec CzSpec::all_ones(std::size_t n) {
    CzSpec spec(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            spec.upper_.set(i, j, true);
        }
    }
    return spec;
}

bool CzSpec::has(Qubit a, Qubit b) const noexcept {
    if (a == b) {
        return false;
    }
    return a < b ? upper_.get(a, b) : upper_.get(b, a);
}

void CzSpec::set(Qubit a, Qubit b, bool value) {
    if (a == b || a >= n() || b >= n()) {
        throw std::out_of_range("CzSpec::set needs two distinct qubits below n");
    }
    upper_.set(std::min(a, b), std::max(a, b), value);
}

Circuit CzSpec::literal_circuit() const {
    Circuit c(n());
    for (std::size_t i = 0; i < n(); ++i) {
        for (std::size_t j = i + 1; j < n(); ++j) {
            if (upper_.get(i, j)) {
                c.append(Gate::cz(static_cast<Qubit>(i), static_cast<Qubit>(j)));
            }
        }
    }
    return c;
}

std::vector<Gate> CzParts::gates() const {
    std::vector<Gate> out = prefix;
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

// ---------------------------------------------------------------------------
// Recursion tables.

namespace {

struct CzTables {
    std::vector<std::uint32_t> full;
    std::vector<std::uint32_t> basic;
    std::vector<CzStrategy> choice;
};

std::size_t coloring_term(std::size_t n) noexcept {
    if (n <= 1) {
        return 0;
    }
    return n % 2 == 0 ? n - 1 : n;
}

template <typename Lookup>
std::size_t one_step_term(std::size_t n, Lookup d) {
    std::size_t h = (n + 1) / 2;
    return d(h) + h / 2 + 2 * ceil_log2(h);
}

template <typename Lookup>
std::size_t two_step_term(std::size_t n, Lookup d) {
    std::size_t h = (n + 1) / 2;
    std::size_t q = (h + 1) / 2;
    return d(q) + h / 2 + q / 2 + 2 * ceil_log2(q) + 6;
}

const CzTables &cz_tables() {
    static CzTables tables;
    static std::once_flag once;
    std::call_once(once, [] {
        std::size_t size = kMaxTableN + 1;
        tables.full.assign(size, 0);
        tables.basic.assign(size, 0);
        tables.choice.assign(size, CzStrategy::ColoringBase);
        auto full = [](std::size_t k) { return static_cast<std::size_t>(tables.full[k]); };
        auto basic = [](std::size_t k) { return static_cast<std::size_t>(tables.basic[k]); };
        tables.full[1] = tables.basic[1] = 0;
        tables.full[2] = tables.basic[2] = 1;
        tables.full[3] = tables.basic[3] = 3;
        for (std::size_t n = 4; n < size; ++n) {
            std::size_t c = coloring_term(n);
            std::size_t o = one_step_term(n, full);
            std::size_t t = two_step_term(n, full);
            std::size_t best = c;
            CzStrategy pick = CzStrategy::ColoringBase;
            if (o < best) {
                best = o;
                pick = CzStrategy::OneStep;
            }
            if (t < best) {
                best = t;
                pick = CzStrategy::TwoStep;
            }
            tables.full[n] = static_cast<std::uint32_t>(best);
            tables.choice[n] = pick;
            tables.basic[n] = static_cast<std::uint32_t>(std::min(coloring_term(n), one_step_term(n, basic)));
        }
    });
    return tables;
}

void check_table_n(std::size_t n) {
    if (n < 1 || n > kMaxTableN) {
        throw std::out_of_range("recursion table covers 1.." + std::to_string(kMaxTableN) + ", got " + std::to_string(n));
    }
}

}  // namespace

std::size_t cz_depth_recursion(std::size_t n) {
    check_table_n(n);
    return cz_tables().full[n];
}

std::size_t cz_basic_recursion(std::size_t n) {
    check_table_n(n);
    return cz_tables().basic[n];
}

CzStrategy cz_strategy_for(std::size_t n) {
    check_table_n(n);
    return cz_tables().choice[n];
}

std::size_t cz_coloring_depth(std::size_t n) noexcept {
    return coloring_term(n);
}

std::size_t cz_one_step_depth(std::size_t n) {
    return one_step_term(n, cz_depth_recursion);
}

std::size_t cz_two_step_depth(std::size_t n) {
    return two_step_term(n, cz_depth_recursion);
}

// ---------------------------------------------------------------------------
// Synthesis.

namespace {

using QubitList = std::vector<Qubit>;

void emit_coloring(const CzSpec &spec, const QubitList &qs, std::vector<Gate> &out) {
    std::size_t s = qs.size();
    if (s < 2) {
        return;
    }
    std::size_t vertices = s + (s % 2);
    std::size_t ring = vertices - 1;
    auto emit = [&](std::size_t u, std::size_t v) {
        if (u < s && v < s && spec.has(qs[u], qs[v])) {
            out.push_back(Gate::cz(qs[u], qs[v]));
        }
    };
    for (std::size_t r = 0; r < ring; ++r) {
        emit(ring, r);
        for (std::size_t t = 1; t < vertices / 2; ++t) {
            emit((r + t) % ring, (r + ring - t) % ring);
        }
    }
}

BitMatrix cross_pattern(const CzSpec &spec, const QubitList &a, const QubitList &b) {
    BitMatrix p(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (spec.has(a[i], b[j])) {
                p.set(i, j, true);
            }
        }
    }
    return p;
}

void split_half(const QubitList &qs, QubitList &a, QubitList &b) {
    std::size_t h = (qs.size() + 1) / 2;
    a.assign(qs.begin(), qs.begin() + static_cast<std::ptrdiff_t>(h));
    b.assign(qs.begin() + static_cast<std::ptrdiff_t>(h), qs.end());
}

void emit_cz(const CzSpec &spec, const QubitList &qs, CzStrategy strategy, std::vector<Gate> &out);

void emit_one_step(const CzSpec &spec, const QubitList &qs, std::vector<Gate> &out) {
    QubitList a, b;
    split_half(qs, a, b);
    auto parts = m01_parts(QubitSet(a), QubitSet(b), cross_pattern(spec, a, b));
    out.insert(out.end(), parts.prefix.begin(), parts.prefix.end());
    out.insert(out.end(), parts.rest.begin(), parts.rest.end());
    emit_cz(spec, a, CzStrategy::Auto, out);
    emit_cz(spec, b, CzStrategy::Auto, out);
}

void emit_rect(const QubitList &x, const QubitList &y, std::vector<Gate> &out) {
    if (x.empty() || y.empty()) {
        return;
    }
    auto g = rectangle_parts(QubitSet(x), QubitSet(y)).gates();
    out.insert(out.end(), g.begin(), g.end());
}

void emit_two_step(const CzSpec &spec, const QubitList &qs, std::vector<Gate> &out) {
    std::array<QubitList, 2> half;
    split_half(qs, half[0], half[1]);
    std::array<std::array<QubitList, 2>, 2> quarter;
    split_half(half[0], quarter[0][0], quarter[0][1]);
    split_half(half[1], quarter[1][0], quarter[1][1]);

    HalvingResult top = halve_weights(cross_pattern(spec, half[0], half[1]));
    std::array<HalvingResult, 2> inner = {
        halve_weights(cross_pattern(spec, quarter[0][0], quarter[0][1])),
        halve_weights(cross_pattern(spec, quarter[1][0], quarter[1][1])),
    };

    // Level-one flag of every qubit, keyed by position inside its half.
    std::array<std::vector<bool>, 2> level1 = {top.row_flips, top.col_flips};

    // sets[i][j][k]: half i, level-one class j (0 = flipped, 1 = kept),
    // level-two class k (0 = first quarter flipped, 1 = first quarter kept,
    // 2 = second quarter flipped, 3 = second quarter kept).
    std::array<std::array<std::array<QubitList, 4>, 2>, 2> sets;
    for (std::size_t i = 0; i < 2; ++i) {
        std::size_t first = quarter[i][0].size();
        for (std::size_t pos = 0; pos < half[i].size(); ++pos) {
            std::size_t j = level1[i][pos] ? 0 : 1;
            std::size_t k;
            if (pos < first) {
                k = inner[i].row_flips[pos] ? 0 : 1;
            } else {
                k = inner[i].col_flips[pos - first] ? 2 : 3;
            }
            sets[i][j][k].push_back(half[i][pos]);
        }
    }

    std::array<std::array<std::array<Qubit, 4>, 2>, 2> rep{};
    std::array<std::array<std::array<bool, 4>, 2>, 2> present{};
    std::vector<Gate> trees;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 4; ++k) {
                if (sets[i][j][k].empty()) {
                    continue;
                }
                auto t = parity_tree(QubitSet(sets[i][j][k]));
                auto g = t.gates();
                trees.insert(trees.end(), g.begin(), g.end());
                rep[i][j][k] = t.representative;
                present[i][j][k] = true;
            }
        }
    }
    auto reps = [&](std::size_t i, std::size_t j, std::initializer_list<std::size_t> ks) {
        QubitList r;
        for (std::size_t k : ks) {
            if (present[i][j][k]) {
                r.push_back(rep[i][j][k]);
            }
        }
        return r;
    };
    auto reps_over_j = [&](std::size_t i, std::size_t k) {
        QubitList r;
        for (std::size_t j = 0; j < 2; ++j) {
            if (present[i][j][k]) {
                r.push_back(rep[i][j][k]);
            }
        }
        return r;
    };

    out.insert(out.end(), trees.begin(), trees.end());
    // Level one: A' x (B \ B') and (A \ A') x B'.
    emit_rect(reps(0, 0, {0, 1, 2, 3}), reps(1, 1, {0, 1, 2, 3}), out);
    emit_rect(reps(0, 1, {0, 1, 2, 3}), reps(1, 0, {0, 1, 2, 3}), out);
    // Level two inside each half: Q1' x (Q2 \ Q2') and (Q1 \ Q1') x Q2'.
    for (std::size_t i = 0; i < 2; ++i) {
        emit_rect(reps_over_j(i, 0), reps_over_j(i, 3), out);
        emit_rect(reps_over_j(i, 1), reps_over_j(i, 2), out);
    }
    out.insert(out.end(), trees.rbegin(), trees.rend());

    auto top_colors = coloring_gates(QubitSet(half[0]), QubitSet(half[1]), top.reduced);
    out.insert(out.end(), top_colors.begin(), top_colors.end());
    for (std::size_t i = 0; i < 2; ++i) {
        auto g = coloring_gates(QubitSet(quarter[i][0]), QubitSet(quarter[i][1]), inner[i].reduced);
        out.insert(out.end(), g.begin(), g.end());
    }
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t k = 0; k < 2; ++k) {
            emit_cz(spec, quarter[i][k], CzStrategy::Auto, out);
        }
    }
}

void emit_cz(const CzSpec &spec, const QubitList &qs, CzStrategy strategy, std::vector<Gate> &out) {
    std::size_t s = qs.size();
    if (s < 2) {
        return;
    }
    if (s < 4) {
        emit_coloring(spec, qs, out);
        return;
    }
    if (strategy == CzStrategy::Auto) {
        strategy = cz_strategy_for(s);
    }
    switch (strategy) {
        case CzStrategy::ColoringBase:
        case CzStrategy::Auto:
            emit_coloring(spec, qs, out);
            break;
        case CzStrategy::OneStep:
            emit_one_step(spec, qs, out);
            break;
        case CzStrategy::TwoStep:
            emit_two_step(spec, qs, out);
            break;
    }
}

QubitList all_qubits(std::size_t n) {
    QubitList qs(n);
    for (std::size_t i = 0; i < n; ++i) {
        qs[i] = static_cast<Qubit>(i);
    }
    return qs;
}

}  // namespace

Circuit synth_cz_coloring(const CzSpec &spec) {
    std::vector<Gate> out;
    emit_coloring(spec, all_qubits(spec.n()), out);
    return Circuit(spec.n(), std::move(out));
}

CzParts synth_cz_parts(const CzSpec &spec, CzStrategy strategy) {
    std::size_t n = spec.n();
    CzParts parts;
    if (n < 4) {
        strategy = CzStrategy::ColoringBase;
    } else if (strategy == CzStrategy::Auto) {
        strategy = cz_strategy_for(n);
    }
    parts.top = strategy;
    std::vector<Gate> all;
    emit_cz(spec, all_qubits(n), strategy, all);
    auto first_cz = std::find_if(all.begin(), all.end(), [](const Gate &g) { return g.kind != GateKind::CNOT; });
    parts.prefix.assign(all.begin(), first_cz);
    parts.rest.assign(first_cz, all.end());
    return parts;
}

Circuit synth_cz(const CzSpec &spec, CzStrategy strategy) {
    return Circuit(spec.n(), synth_cz_parts(spec, strategy).gates());
}

}  // namespace cliffdepth

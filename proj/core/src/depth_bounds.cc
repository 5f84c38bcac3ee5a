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

#include "cliffdepth/depth_bounds.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "cliffdepth/clifford_synth.h"
#include "cliffdepth/cnot_synth.h"
#include "cliffdepth/cz_synth.h"
#include "cliffdepth/rectangle.h"

namespace cliffdepth {

std::string_view family_name(Family f) noexcept {
    switch (f) {
        case Family::Cz:
            return "cz";
        case Family::CzBasic:
            return "cz-basic";
        case Family::Cnot:
            return "cnot";
        case Family::CnotReordering:
            return "cnot-perm";
        case Family::Clifford:
            return "clifford";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
    for (Family f : {Family::Cz, Family::CzBasic, Family::Cnot, Family::CnotReordering, Family::Clifford}) {
        if (family_name(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

std::size_t recursion_bound(Family f, std::size_t n) {
    switch (f) {
        case Family::Cz:
            return cz_depth_recursion(n);
        case Family::CzBasic:
            return cz_basic_recursion(n);
        case Family::Cnot:
            return 2 * cnot_depth_recursion(n) + 6;
        case Family::CnotReordering:
            return 2 * cnot_depth_recursion(n);
        case Family::Clifford:
            return 2 * cz_depth_recursion(n) + 2 * cnot_depth_recursion(n) + 6 - merge_saving(n);
    }
    throw std::invalid_argument("unknown family");
}

DepthTable DepthTable::fill(Family f, std::size_t n_max) {
    if (n_max > kMaxTableN) {
        throw std::out_of_range("DepthTable::fill beyond the recursion range");
    }
    DepthTable t{f, std::vector<std::uint32_t>(n_max + 1, 0)};
    for (std::size_t n = 1; n <= n_max; ++n) {
        t.values[n] = static_cast<std::uint32_t>(recursion_bound(f, n));
    }
    return t;
}

std::optional<std::size_t> DepthTable::first_decrease() const {
    for (std::size_t n = 2; n < values.size(); ++n) {
        if (values[n] < values[n - 1]) {
            return n;
        }
    }
    return std::nullopt;
}

namespace {

constexpr double kNearIntegerTolerance = 1e-6;

double formula_value(const BoundFormula &b, std::size_t n) {
    double l = std::log2(static_cast<double>(n));
    return b.linear * static_cast<double>(n) + b.log2_coeff * l * l + b.log_coeff * l + b.constant;
}

}  // namespace

bool BoundFormula::near_integer(std::size_t n) const {
    double v = formula_value(*this, n);
    return std::fabs(v - std::round(v)) < kNearIntegerTolerance;
}

long long BoundFormula::evaluate(std::size_t n) const {
    if (near_integer(n)) {
        long double l = std::log2(static_cast<long double>(n));
        long double v = static_cast<long double>(linear) * static_cast<long double>(n) +
                        static_cast<long double>(log2_coeff) * l * l + static_cast<long double>(log_coeff) * l +
                        static_cast<long double>(constant);
        return static_cast<long long>(std::floor(v));
    }
    return static_cast<long long>(std::floor(formula_value(*this, n)));
}

BoundFormula closed_form(Family f) {
    switch (f) {
        case Family::Cz:
            return {0.5, 0.4993, 3.0191, -10.9139, 39, kMaxTableN};
        case Family::CzBasic:
            return {0.5, 0.9937, 1.1882, -14.6772, 43, kMaxTableN};
        case Family::Cnot:
            return {1.0, 1.9496, 3.5075, -23.4269, 70, kMaxTableN};
        case Family::CnotReordering:
            return {1.0, 1.9496, 3.5075, -29.4269, 70, kMaxTableN};
        case Family::Clifford:
            return {2.0, 2.9487, 8.4909, -44.4798, 43, kMaxTableN};
    }
    throw std::invalid_argument("unknown family");
}

std::size_t prior_art_bound(Family f, std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("prior_art_bound needs n >= 2");
    }
    auto cz = [n] { return n % 2 == 0 ? n - 1 : n; };
    auto cnot = [n] { return std::min(2 * n, (4 * n + 24 * ceil_log2(n)) / 3); };
    switch (f) {
        case Family::Cz:
        case Family::CzBasic:
            return cz();
        case Family::Cnot:
        case Family::CnotReordering:
            return cnot();
        case Family::Clifford:
            return 2 * cz() + cnot();
    }
    throw std::invalid_argument("unknown family");
}

ValidationReport validate_closed_form(Family f, const BoundFormula &formula) {
    ValidationReport rep;
    rep.family = f;
    rep.n_lo = formula.n_lo;
    rep.n_hi = formula.n_hi;
    bool first = true;
    for (std::size_t n = formula.n_lo; n <= formula.n_hi; ++n) {
        long long bound = formula.evaluate(n);
        long long slack = bound - static_cast<long long>(recursion_bound(f, n));
        if (formula.near_integer(n)) {
            rep.near_integer.push_back(n);
        }
        if (slack < 0) {
            rep.violations.push_back(n);
        }
        if (first) {
            rep.min_slack = rep.max_slack = slack;
            first = false;
        } else {
            rep.min_slack = std::min(rep.min_slack, slack);
            rep.max_slack = std::max(rep.max_slack, slack);
        }
        ++rep.checked;
    }
    return rep;
}

std::vector<std::size_t> first_branch_violations(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> out;
    for (std::size_t n = std::max<std::size_t>(lo, 2); n <= hi; ++n) {
        std::size_t floor_log = 0;
        while ((std::size_t{2} << floor_log) <= n - 1) {
            ++floor_log;
        }
        if (cnot_coloring_recursion(n) + 2 > n + floor_log) {
            out.push_back(n);
        }
    }
    return out;
}

namespace {

struct BeatScan {
    std::size_t first = 0;
    std::size_t stable = 0;
};

BeatScan scan_beats(std::size_t lo, std::size_t hi, const std::function<bool(std::size_t)> &beats) {
    BeatScan s;
    std::size_t last_fail = lo - 1;
    for (std::size_t n = lo; n <= hi; ++n) {
        if (beats(n)) {
            if (s.first == 0) {
                s.first = n;
            }
        } else {
            last_fail = n;
        }
    }
    s.stable = last_fail + 1;
    return s;
}

}  // namespace

CrossoverReport crossover_scan(std::size_t scan_max) {
    if (scan_max < 4 || scan_max > kMaxTableN) {
        throw std::out_of_range("crossover_scan range must lie in [4, 1345000]");
    }
    CrossoverReport r;
    auto cnot = scan_beats(2, scan_max, [](std::size_t n) {
        return recursion_bound(Family::Cnot, n) < prior_art_bound(Family::Cnot, n);
    });
    r.cnot_first_beat = cnot.first;
    r.cnot_stable = cnot.stable;
    r.prior_internal = scan_beats(2, scan_max, [](std::size_t n) {
                           return (4 * n + 24 * ceil_log2(n)) / 3 < 2 * n;
                       }).stable;
    r.prior_internal_real_log = scan_beats(2, scan_max, [](std::size_t n) {
                                    double v = 4.0 * static_cast<double>(n) / 3.0 +
                                               8.0 * std::log2(static_cast<double>(n));
                                    return v < 2.0 * static_cast<double>(n);
                                }).stable;
    r.cz_stable = scan_beats(4, scan_max, [](std::size_t n) {
                      return recursion_bound(Family::Cz, n) < prior_art_bound(Family::Cz, n);
                  }).stable;
    r.clifford_stable = scan_beats(4, scan_max, [](std::size_t n) {
                            return recursion_bound(Family::Clifford, n) < prior_art_bound(Family::Clifford, n);
                        }).stable;
    return r;
}

void emit_comparison_csv(Family f, std::size_t lo, std::size_t hi, std::ostream &out) {
    if (lo < 2 || hi < lo || hi > kMaxTableN) {
        throw std::out_of_range("CSV range must satisfy 2 <= from <= to <= 1345000");
    }
    BoundFormula formula = closed_form(f);
    out << "n," << (f == Family::Clifford ? "prior_reconstructed" : "prior") << ",closed_form,recursion\n";
    for (std::size_t n = lo; n <= hi; ++n) {
        out << n << ',' << prior_art_bound(f, n) << ',' << formula.evaluate(n) << ',' << recursion_bound(f, n)
            << '\n';
    }
}

}  // namespace cliffdepth

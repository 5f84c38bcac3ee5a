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

#include "cliffdepth/m01.h"

#include <algorithm>
#include <string>

namespace cliffdepth {

HalvingResult halve_weights(const BitMatrix &pattern) {
    HalvingResult res{pattern, std::vector<bool>(pattern.rows(), false), std::vector<bool>(pattern.cols(), false), 0, 0, {}};
    BitMatrix &m = res.reduced;
    std::size_t k = m.rows();
    std::size_t cols = m.cols();
    std::size_t total = m.weight();
    res.weight_trace.push_back(total);

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < k; ++i) {
            ++res.inspections;
            std::size_t w = m.row_weight(i);
            if (cols - w < w) {
                m.complement_row(i);
                res.row_flips[i] = !res.row_flips[i];
                total = total - w + (cols - w);
                res.weight_trace.push_back(total);
                ++res.flips;
                changed = true;
            }
        }
        for (std::size_t j = 0; j < cols; ++j) {
            ++res.inspections;
            std::size_t w = m.col_weight(j);
            if (k - w < w) {
                m.complement_col(j);
                res.col_flips[j] = !res.col_flips[j];
                total = total - w + (k - w);
                res.weight_trace.push_back(total);
                ++res.flips;
                changed = true;
            }
        }
    }
    return res;
}

std::vector<ColorClass> color_bipartite_edges(const BitMatrix &pattern) {
    std::size_t k = pattern.rows();
    std::size_t m = pattern.cols();
    std::size_t delta = 0;
    for (std::size_t i = 0; i < k; ++i) {
        delta = std::max(delta, pattern.row_weight(i));
    }
    for (std::size_t j = 0; j < m; ++j) {
        delta = std::max(delta, pattern.col_weight(j));
    }
    if (delta == 0) {
        return {};
    }

    constexpr int kNone = -1;
    // at_left[u][c] = right endpoint of the c-colored edge at left vertex u.
    std::vector<std::vector<int>> at_left(k, std::vector<int>(delta, kNone));
    std::vector<std::vector<int>> at_right(m, std::vector<int>(delta, kNone));

    auto free_color = [delta](const std::vector<int> &slots) {
        for (std::size_t c = 0; c < delta; ++c) {
            if (slots[c] == kNone) {
                return c;
            }
        }
        return delta;
    };

    struct PathEdge {
        int left;
        int right;
        std::size_t color;
    };
    std::vector<PathEdge> path;

    for (std::size_t u = 0; u < k; ++u) {
        for (std::size_t v = 0; v < m; ++v) {
            if (!pattern.get(u, v)) {
                continue;
            }
            std::size_t a = free_color(at_left[u]);
            std::size_t b = free_color(at_right[v]);
            if (at_right[v][a] != kNone) {
                // Swap colors a and b along the a/b alternating path leaving v.
                // It cannot reach u, which has no a-edge.
                path.clear();
                int cur = static_cast<int>(v);
                bool on_right = true;
                std::size_t c = a;
                while (true) {
                    int next = on_right ? at_right[cur][c] : at_left[cur][c];
                    if (next == kNone) {
                        break;
                    }
                    if (on_right) {
                        path.push_back({next, cur, c});
                    } else {
                        path.push_back({cur, next, c});
                    }
                    cur = next;
                    on_right = !on_right;
                    c = (c == a) ? b : a;
                }
                for (const auto &e : path) {
                    at_left[e.left][e.color] = kNone;
                    at_right[e.right][e.color] = kNone;
                }
                for (const auto &e : path) {
                    std::size_t nc = (e.color == a) ? b : a;
                    at_left[e.left][nc] = e.right;
                    at_right[e.right][nc] = e.left;
                }
            }
            at_left[u][a] = static_cast<int>(v);
            at_right[v][a] = static_cast<int>(u);
        }
    }

    std::vector<ColorClass> classes(delta);
    for (std::size_t u = 0; u < k; ++u) {
        for (std::size_t c = 0; c < delta; ++c) {
            if (at_left[u][c] != kNone) {
                classes[c].emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(at_left[u][c]));
            }
        }
    }
    return classes;
}

std::vector<ColorClass> bipartite_edge_color(const BitMatrix &pattern) {
    std::size_t k = pattern.rows();
    std::size_t m = pattern.cols();
    for (std::size_t i = 0; i < k; ++i) {
        if (pattern.row_weight(i) > m / 2) {
            throw PreconditionError(
                "row " + std::to_string(i) + " has weight " + std::to_string(pattern.row_weight(i)) +
                " > floor(m/2) = " + std::to_string(m / 2));
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (pattern.col_weight(j) > k / 2) {
            throw PreconditionError(
                "column " + std::to_string(j) + " has weight " + std::to_string(pattern.col_weight(j)) +
                " > floor(k/2) = " + std::to_string(k / 2));
        }
    }
    return color_bipartite_edges(pattern);
}

std::vector<Gate> coloring_gates(const QubitSet &a, const QubitSet &b, const BitMatrix &pattern) {
    std::vector<Gate> out;
    for (const auto &cls : color_bipartite_edges(pattern)) {
        for (auto [i, j] : cls) {
            out.push_back(Gate::cz(a[i], b[j]));
        }
    }
    return out;
}

std::vector<Gate> M01Parts::gates() const {
    std::vector<Gate> out = prefix;
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

M01Parts m01_parts(const QubitSet &a, const QubitSet &b, const BitMatrix &pattern) {
    if (pattern.rows() != a.size() || pattern.cols() != b.size()) {
        throw DimensionError(
            "pattern is " + std::to_string(pattern.rows()) + "x" + std::to_string(pattern.cols()) +
            " but the qubit sets are " + std::to_string(a.size()) + "x" + std::to_string(b.size()));
    }
    HalvingResult halved = halve_weights(pattern);

    std::vector<Qubit> a_flip, a_keep, b_flip, b_keep;
    for (std::size_t i = 0; i < a.size(); ++i) {
        (halved.row_flips[i] ? a_flip : a_keep).push_back(a[i]);
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        (halved.col_flips[j] ? b_flip : b_keep).push_back(b[j]);
    }

    // Flipping rows A' and columns B' toggles exactly the cells of
    // (A\A') x B' and A' x (B\B'); those two rectangles use disjoint qubits.
    std::vector<RectangleParts> rects;
    if (!a_keep.empty() && !b_flip.empty()) {
        rects.push_back(rectangle_parts(QubitSet(a_keep), QubitSet(b_flip)));
    }
    if (!a_flip.empty() && !b_keep.empty()) {
        rects.push_back(rectangle_parts(QubitSet(a_flip), QubitSet(b_keep)));
    }

    M01Parts parts;
    for (const auto &r : rects) {
        parts.prefix.insert(parts.prefix.end(), r.prefix.begin(), r.prefix.end());
    }
    for (const auto &r : rects) {
        parts.rest.insert(parts.rest.end(), r.middle.begin(), r.middle.end());
    }
    for (const auto &r : rects) {
        parts.rest.insert(parts.rest.end(), r.suffix.begin(), r.suffix.end());
    }
    auto colored = coloring_gates(a, b, halved.reduced);
    parts.rest.insert(parts.rest.end(), colored.begin(), colored.end());
    return parts;
}

Circuit synth_m01(const QubitSet &a, const QubitSet &b, const BitMatrix &pattern, std::size_t qubit_count) {
    // rectangle_parts rejects overlap only when a rectangle is emitted.
    for (Qubit x : a.qubits()) {
        if (std::find(b.qubits().begin(), b.qubits().end(), x) != b.qubits().end()) {
            throw std::invalid_argument("M01 qubit sets overlap on qubit " + std::to_string(x));
        }
    }
    return Circuit(qubit_count, m01_parts(a, b, pattern).gates());
}

}  // namespace cliffdepth

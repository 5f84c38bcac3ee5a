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

#include "cliffdepth/rectangle.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cliffdepth {

QubitSet::QubitSet(std::vector<Qubit> qubits) : qubits_(std::move(qubits)) {
    if (qubits_.empty()) {
        throw std::invalid_argument("QubitSet must be non-empty");
    }
    std::unordered_set<Qubit> seen;
    for (Qubit q : qubits_) {
        if (!seen.insert(q).second) {
            throw std::invalid_argument("QubitSet contains qubit " + std::to_string(q) + " twice");
        }
    }
}

std::size_t ceil_log2(std::size_t x) noexcept {
    std::size_t d = 0;
    while ((std::size_t{1} << d) < x) {
        ++d;
    }
    return d;
}

std::vector<Gate> ParityTree::gates() const {
    std::vector<Gate> out;
    for (const auto &layer : layers) {
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

ParityTree parity_tree(const QubitSet &s) {
    ParityTree tree{{}, s.back()};
    std::vector<Qubit> live = s.qubits();
    while (live.size() > 1) {
        std::vector<Gate> layer;
        std::vector<Qubit> next;
        std::size_t i = 0;
        for (; i + 1 < live.size(); i += 2) {
            layer.push_back(Gate::cnot(live[i], live[i + 1]));
            next.push_back(live[i + 1]);
        }
        if (i < live.size()) {
            next.push_back(live[i]);
        }
        tree.layers.push_back(std::move(layer));
        live = std::move(next);
    }
    return tree;
}

std::vector<Gate> RectangleParts::gates() const {
    std::vector<Gate> out = prefix;
    out.insert(out.end(), middle.begin(), middle.end());
    out.insert(out.end(), suffix.begin(), suffix.end());
    return out;
}

RectangleParts rectangle_parts(const QubitSet &a, const QubitSet &b) {
    {
        std::unordered_set<Qubit> in_a(a.qubits().begin(), a.qubits().end());
        for (Qubit q : b.qubits()) {
            if (in_a.count(q)) {
                throw std::invalid_argument("rectangle sets overlap on qubit " + std::to_string(q));
            }
        }
    }
    RectangleParts parts;
    ParityTree ta = parity_tree(a);
    ParityTree tb = parity_tree(b);
    Qubit ra = ta.representative;
    Qubit rb = tb.representative;
    std::size_t da = ta.depth();
    std::size_t db = tb.depth();

    if (da == 0 && db == 0) {
        parts.middle.push_back(Gate::cz(ra, rb));
        return parts;
    }

    // The last layer of a tree of depth >= 1 is a single CNOT into the
    // representative; that CNOT, the central CZ and its mirror image collapse
    // into CZs of depth two.
    auto take_prefix = [&parts](const ParityTree &t, std::size_t layers) {
        for (std::size_t l = 0; l < layers; ++l) {
            parts.prefix.insert(parts.prefix.end(), t.layers[l].begin(), t.layers[l].end());
        }
    };
    if (da == db) {
        take_prefix(ta, da - 1);
        take_prefix(tb, db - 1);
        Qubit xa = ta.layers.back().front().q0;
        Qubit xb = tb.layers.back().front().q0;
        parts.middle = {Gate::cz(xa, rb), Gate::cz(ra, xb), Gate::cz(xa, xb), Gate::cz(ra, rb)};
    } else if (da > db) {
        take_prefix(ta, da - 1);
        take_prefix(tb, db);
        Qubit xa = ta.layers.back().front().q0;
        parts.middle = {Gate::cz(xa, rb), Gate::cz(ra, rb)};
    } else {
        take_prefix(ta, da);
        take_prefix(tb, db - 1);
        Qubit xb = tb.layers.back().front().q0;
        parts.middle = {Gate::cz(ra, xb), Gate::cz(ra, rb)};
    }
    parts.suffix.assign(parts.prefix.rbegin(), parts.prefix.rend());
    return parts;
}

Circuit synth_rectangle(const QubitSet &a, const QubitSet &b, std::size_t qubit_count) {
    return Circuit(qubit_count, rectangle_parts(a, b).gates());
}

}  // namespace cliffdepth

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

#include "cliffdepth/gf2.h"

#include <algorithm>
#include <bit>

namespace cliffdepth {

namespace {

BitMatrix::word_t tail_mask(std::size_t cols) {
    std::size_t r = cols % BitMatrix::kWordBits;
    return r == 0 ? ~BitMatrix::word_t{0} : ((BitMatrix::word_t{1} << r) - 1);
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + kWordBits - 1) / kWordBits) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("BitMatrix needs at least one row and one column");
    }
    data_.assign(rows_ * words_per_row_, 0);
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows) {
    if (rows.empty() || rows.front().empty()) {
        throw DimensionError("empty matrix");
    }
    BitMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) {
            throw DimensionError("ragged matrix rows");
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            char c = rows[i][j];
            if (c != '0' && c != '1') {
                throw std::invalid_argument(std::string("bad matrix character '") + c + "'");
            }
            m.set(i, j, c == '1');
        }
    }
    return m;
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) noexcept {
    const word_t *s = data_.data() + src * words_per_row_;
    word_t *d = data_.data() + dst * words_per_row_;
    for (std::size_t w = 0; w < words_per_row_; ++w) {
        d[w] ^= s[w];
    }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a == b) {
        return;
    }
    std::swap_ranges(
        data_.begin() + a * words_per_row_,
        data_.begin() + (a + 1) * words_per_row_,
        data_.begin() + b * words_per_row_);
}

void BitMatrix::complement_row(std::size_t i) noexcept {
    auto r = row(i);
    for (auto &w : r) {
        w = ~w;
    }
    r.back() &= tail_mask(cols_);
}

void BitMatrix::complement_col(std::size_t j) noexcept {
    for (std::size_t i = 0; i < rows_; ++i) {
        flip(i, j);
    }
}

std::size_t BitMatrix::row_weight(std::size_t i) const noexcept {
    std::size_t total = 0;
    for (word_t w : row(i)) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::size_t BitMatrix::col_weight(std::size_t j) const noexcept {
    std::size_t total = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        total += get(i, j);
    }
    return total;
}

std::size_t BitMatrix::weight() const noexcept {
    std::size_t total = 0;
    for (word_t w : data_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool BitMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](word_t w) { return w == 0; });
}

bool BitMatrix::is_identity() const noexcept {
    return square() && *this == identity(rows_);
}

bool BitMatrix::is_upper_triangular() const noexcept {
    if (!square()) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (get(i, j)) {
                return false;
            }
        }
    }
    return true;
}

bool BitMatrix::is_lower_triangular() const noexcept {
    if (!square()) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if (get(i, j)) {
                return false;
            }
        }
    }
    return true;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (get(i, j)) {
                t.set(j, i, true);
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
        throw DimensionError("block out of range");
    }
    BitMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) {
            if (get(r0 + i, c0 + j)) {
                b.set(i, j, true);
            }
        }
    }
    return b;
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::string s(cols_, '0');
        for (std::size_t j = 0; j < cols_; ++j) {
            if (get(i, j)) {
                s[j] = '1';
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

Permutation::Permutation(std::vector<std::uint32_t> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (auto v : map_) {
        if (v >= map_.size() || seen[v]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = static_cast<std::uint32_t>(i);
    }
    return Permutation(std::move(m));
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (map_[i] != i) {
            return false;
        }
    }
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) {
        inv[map_[i]] = static_cast<std::uint32_t>(i);
    }
    return Permutation(std::move(inv));
}

BitMatrix Permutation::apply_to_rows(const BitMatrix &m) const {
    if (m.rows() != map_.size()) {
        throw DimensionError("permutation size does not match matrix rows");
    }
    BitMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < map_.size(); ++i) {
        auto src = m.row(map_[i]);
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError(
            "mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto out = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (!a.get(i, k)) {
                continue;
            }
            auto src = b.row(k);
            for (std::size_t w = 0; w < out.size(); ++w) {
                out[w] ^= src[w];
            }
        }
    }
    return c;
}

BitMatrix mat_inverse(const BitMatrix &a) {
    if (!a.square()) {
        throw DimensionError("mat_inverse: matrix is not square");
    }
    std::size_t n = a.rows();
    BitMatrix work = a;
    BitMatrix inv = BitMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && !work.get(pivot, col)) {
            ++pivot;
        }
        if (pivot == n) {
            throw SingularMatrixError("mat_inverse: matrix is singular over GF(2)");
        }
        work.swap_rows(pivot, col);
        inv.swap_rows(pivot, col);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && work.get(r, col)) {
                work.xor_row_into(col, r);
                inv.xor_row_into(col, r);
            }
        }
    }
    return inv;
}

std::size_t rank(BitMatrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && !m.get(pivot, col)) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        m.swap_rows(pivot, r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m.get(i, col)) {
                m.xor_row_into(r, i);
            }
        }
        ++r;
    }
    return r;
}

LuDecomposition lu_decompose(const BitMatrix &r) {
    if (!r.square()) {
        throw DimensionError("lu_decompose: matrix is not square");
    }
    std::size_t n = r.rows();
    BitMatrix upper = r;
    BitMatrix lower = BitMatrix::identity(n);
    // order[i] = original row now sitting at position i.
    std::vector<std::uint32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = static_cast<std::uint32_t>(i);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && !upper.get(pivot, k)) {
            ++pivot;
        }
        if (pivot == n) {
            throw SingularMatrixError("lu_decompose: matrix is singular over GF(2)");
        }
        if (pivot != k) {
            upper.swap_rows(pivot, k);
            std::swap(order[pivot], order[k]);
            for (std::size_t j = 0; j < k; ++j) {
                bool a = lower.get(k, j);
                lower.set(k, j, lower.get(pivot, j));
                lower.set(pivot, j, a);
            }
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (upper.get(i, k)) {
                upper.xor_row_into(k, i);
                lower.set(i, k, true);
            }
        }
    }
    // Row order[i] of r equals row i of L·U; invert to get the relabeling.
    return LuDecomposition{Permutation(std::move(order)).inverse(), std::move(lower), std::move(upper)};
}

std::vector<TranspositionLayer> perm_to_transposition_layers(const Permutation &p) {
    // Swapping v layer by layer must give w[i] = v[p[i]]. Each cycle
    // c_0 -> c_1 -> ... (c_{t+1} = p[c_t]) is written as a product of two
    // reflections of the cycle's index set.
    std::size_t n = p.size();
    std::vector<bool> seen(n, false);
    TranspositionLayer first;
    TranspositionLayer second;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start] || p[start] == start) {
            seen[start] = true;
            continue;
        }
        std::vector<std::uint32_t> cycle;
        for (std::uint32_t c = static_cast<std::uint32_t>(start); !seen[c]; c = p[c]) {
            seen[c] = true;
            cycle.push_back(c);
        }
        std::size_t len = cycle.size();
        // Reflection t <-> 1-t, then t <-> -t (mod len): w[c_t] = v[c_{t+1}].
        for (std::size_t t = 0; t < len; ++t) {
            std::size_t j = (len + 1 - t) % len;
            if (t < j) {
                first.emplace_back(cycle[t], cycle[j]);
            }
            std::size_t k = (len - t) % len;
            if (t < k) {
                second.emplace_back(cycle[t], cycle[k]);
            }
        }
    }
    std::vector<TranspositionLayer> layers;
    if (!first.empty()) {
        layers.push_back(std::move(first));
    }
    if (!second.empty()) {
        layers.push_back(std::move(second));
    }
    return layers;
}

bool solve(const BitMatrix &a, const std::vector<bool> &b, std::vector<bool> &x) {
    if (b.size() != a.rows()) {
        throw DimensionError("solve: right-hand side size mismatch");
    }
    std::size_t rows = a.rows();
    std::size_t cols = a.cols();
    // Augmented matrix [a | b].
    BitMatrix aug(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            aug.set(i, j, a.get(i, j));
        }
        aug.set(i, cols, b[i]);
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && !aug.get(pivot, col)) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        aug.swap_rows(pivot, r);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && aug.get(i, col)) {
                aug.xor_row_into(r, i);
            }
        }
        pivot_cols.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (aug.get(i, cols)) {
            return false;
        }
    }
    x.assign(cols, false);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
        x[pivot_cols[i]] = aug.get(i, cols);
    }
    return true;
}

}  // namespace cliffdepth

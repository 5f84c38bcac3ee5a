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

#ifndef CLIFFDEPTH_GF2_H
#define CLIFFDEPTH_GF2_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliffdepth {

/// Raised when operand shapes are incompatible.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a matrix that must be invertible over GF(2) is not.
struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Dense row-major bit-packed matrix over GF(2).
///
/// Each row occupies `words_per_row()` 64-bit words. Bits past `cols()` in the
/// last word of a row are always zero, so word-level operations (xor, popcount,
/// equality) can run over whole rows without masking.
class BitMatrix {
   public:
    using word_t = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);

    /// Builds a matrix from rows of '0'/'1' characters. All rows must have equal length.
    static BitMatrix from_strings(const std::vector<std::string> &rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return words_per_row_; }
    bool square() const noexcept { return rows_ == cols_; }

    bool get(std::size_t i, std::size_t j) const noexcept {
        return (data_[i * words_per_row_ + j / kWordBits] >> (j % kWordBits)) & 1U;
    }
    void set(std::size_t i, std::size_t j, bool value) noexcept {
        word_t &w = data_[i * words_per_row_ + j / kWordBits];
        word_t mask = word_t{1} << (j % kWordBits);
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t i, std::size_t j) noexcept {
        data_[i * words_per_row_ + j / kWordBits] ^= word_t{1} << (j % kWordBits);
    }

    std::span<word_t> row(std::size_t i) noexcept {
        return {data_.data() + i * words_per_row_, words_per_row_};
    }
    std::span<const word_t> row(std::size_t i) const noexcept {
        return {data_.data() + i * words_per_row_, words_per_row_};
    }

    /// row(dst) ^= row(src)
    void xor_row_into(std::size_t src, std::size_t dst) noexcept;
    void swap_rows(std::size_t a, std::size_t b) noexcept;
    /// Complements every entry of a row (padding stays zero).
    void complement_row(std::size_t i) noexcept;
    void complement_col(std::size_t j) noexcept;

    std::size_t row_weight(std::size_t i) const noexcept;
    std::size_t col_weight(std::size_t j) const noexcept;
    std::size_t weight() const noexcept;
    bool is_zero() const noexcept;
    bool is_identity() const noexcept;
    bool is_upper_triangular() const noexcept;
    bool is_lower_triangular() const noexcept;

    BitMatrix transpose() const;
    /// Copies the block [r0, r0+nr) x [c0, c0+nc).
    BitMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    /// One string of '0'/'1' per row.
    std::vector<std::string> to_strings() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t words_per_row_;
    std::vector<word_t> data_;
};

/// A bijection on {0..n-1}. For row relabeling, `row(i)` of the relabeled
/// matrix is `row(map[i])` of the original.
class Permutation {
   public:
    explicit Permutation(std::vector<std::uint32_t> map);
    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return map_.size(); }
    std::uint32_t operator[](std::size_t i) const noexcept { return map_[i]; }
    const std::vector<std::uint32_t> &map() const noexcept { return map_; }
    bool is_identity() const noexcept;
    Permutation inverse() const;

    /// result[i] = m.row(map[i]).
    BitMatrix apply_to_rows(const BitMatrix &m) const;

    bool operator==(const Permutation &other) const = default;

   private:
    std::vector<std::uint32_t> map_;
};

using Transposition = std::pair<std::uint32_t, std::uint32_t>;
using TranspositionLayer = std::vector<Transposition>;

BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b);
BitMatrix mat_inverse(const BitMatrix &a);
std::size_t rank(BitMatrix m);

struct LuDecomposition {
    Permutation perm;
    BitMatrix lower;  // unit lower triangular
    BitMatrix upper;  // unit upper triangular
};

/// Row-pivoted LU: `perm.apply_to_rows(mat_mul(lower, upper)) == r`.
LuDecomposition lu_decompose(const BitMatrix &r);

/// Splits `p` into at most two layers of disjoint transpositions.
///
/// Swapping the entries of a vector `v` layer by layer (first layer first)
/// yields `w` with `w[i] == v[p[i]]`.
std::vector<TranspositionLayer> perm_to_transposition_layers(const Permutation &p);

/// Finds some x with a·x == b (free variables set to zero). Returns false when
/// the system is inconsistent. `a` may be rectangular.
bool solve(const BitMatrix &a, const std::vector<bool> &b, std::vector<bool> &x);

}  // namespace cliffdepth

#endif

// Copyright 2026 The eaqecc Authors
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

#ifndef EAQECC_GF2_MATRIX_HPP
#define EAQECC_GF2_MATRIX_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eaqecc/vectors.hpp"

namespace eaqecc {

/// Dense bit-packed GF(2) matrix, row-major.
class Gf2Matrix {
   public:
    Gf2Matrix() = default;
    Gf2Matrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), row_words_(words_for_bits(cols)), data_(rows * row_words_, 0) {
    }

    static Gf2Matrix identity(size_t n) {
        Gf2Matrix m(n, n);
        for (size_t i = 0; i < n; i++) {
            m.set(i, i, true);
        }
        return m;
    }

    /// Stacks symplectic vectors as rows (a|b) of a rows x 2n matrix.
    static Gf2Matrix from_symplectic(std::span<const SymplecticVector> vectors, size_t num_qubits) {
        Gf2Matrix m(vectors.size(), 2 * num_qubits);
        for (size_t r = 0; r < vectors.size(); r++) {
            const auto &v = vectors[r];
            if (v.num_qubits() != num_qubits) {
                throw std::invalid_argument("from_symplectic: vector length mismatch");
            }
            for (size_t i = 0; i < num_qubits; i++) {
                m.set(r, i, v.a(i));
                m.set(r, num_qubits + i, v.b(i));
            }
        }
        return m;
    }

    SymplecticVector row_as_symplectic(size_t r) const {
        if (cols_ % 2) {
            throw std::invalid_argument("row_as_symplectic: odd column count");
        }
        size_t n = cols_ / 2;
        SymplecticVector v(n);
        for (size_t i = 0; i < n; i++) {
            v.set_a(i, get(r, i));
            v.set_b(i, get(r, n + i));
        }
        return v;
    }

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }

    bool get(size_t r, size_t c) const {
        return (data_[r * row_words_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(size_t r, size_t c, bool value) {
        auto &w = data_[r * row_words_ + (c >> 6)];
        w = (w & ~(uint64_t{1} << (c & 63))) | (uint64_t{value} << (c & 63));
    }

    std::span<const uint64_t> row(size_t r) const {
        return {data_.data() + r * row_words_, row_words_};
    }
    std::span<uint64_t> row(size_t r) {
        return {data_.data() + r * row_words_, row_words_};
    }

    void xor_row_into(size_t dst, size_t src) {
        auto d = row(dst);
        auto s = row(src);
        for (size_t k = 0; k < row_words_; k++) {
            d[k] ^= s[k];
        }
    }

    void swap_rows(size_t r1, size_t r2) {
        if (r1 == r2) {
            return;
        }
        auto a = row(r1);
        auto b = row(r2);
        for (size_t k = 0; k < row_words_; k++) {
            std::swap(a[k], b[k]);
        }
    }

    bool row_is_zero(size_t r) const {
        for (auto w : row(r)) {
            if (w) {
                return false;
            }
        }
        return true;
    }

    Gf2Matrix transposed() const {
        Gf2Matrix t(cols_, rows_);
        for (size_t r = 0; r < rows_; r++) {
            for (size_t c = 0; c < cols_; c++) {
                if (get(r, c)) {
                    t.set(c, r, true);
                }
            }
        }
        return t;
    }

    Gf2Matrix operator*(const Gf2Matrix &rhs) const {
        if (cols_ != rhs.rows_) {
            throw std::invalid_argument("Gf2Matrix product: inner dimensions differ");
        }
        Gf2Matrix out(rows_, rhs.cols_);
        for (size_t r = 0; r < rows_; r++) {
            auto dst = out.row(r);
            for (size_t k = 0; k < cols_; k++) {
                if (get(r, k)) {
                    auto src = rhs.row(k);
                    for (size_t w = 0; w < dst.size(); w++) {
                        dst[w] ^= src[w];
                    }
                }
            }
        }
        return out;
    }

    bool is_zero() const {
        for (auto w : data_) {
            if (w) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const Gf2Matrix &other) const = default;

    std::string str() const {
        std::string out;
        for (size_t r = 0; r < rows_; r++) {
            for (size_t c = 0; c < cols_; c++) {
                out.push_back(get(r, c) ? '1' : '0');
            }
            out.push_back('\n');
        }
        return out;
    }

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t row_words_ = 0;
    std::vector<uint64_t> data_;
};

struct RowEchelon {
    Gf2Matrix reduced;            // reduced row echelon form; zero rows last
    std::vector<size_t> pivots;   // pivot column of each nonzero row
    size_t rank() const {
        return pivots.size();
    }
};

/// Gauss-Jordan elimination. Columns are scanned left to right; the pivot of
/// each column is the lowest-index row at or below the current rank.
inline RowEchelon rref_gf2(Gf2Matrix m) {
    RowEchelon out;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); c++) {
        size_t p = r;
        while (p < m.rows() && !m.get(p, c)) {
            p++;
        }
        if (p == m.rows()) {
            continue;
        }
        m.swap_rows(r, p);
        for (size_t i = 0; i < m.rows(); i++) {
            if (i != r && m.get(i, c)) {
                m.xor_row_into(i, r);
            }
        }
        out.pivots.push_back(c);
        r++;
    }
    out.reduced = std::move(m);
    return out;
}

inline size_t rank_gf2(const Gf2Matrix &m) {
    return rref_gf2(m).rank();
}

/// Basis of {x : M x = 0}, one basis vector per row of the result.
inline Gf2Matrix kernel_gf2(const Gf2Matrix &m) {
    auto e = rref_gf2(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) {
        is_pivot[c] = true;
    }
    Gf2Matrix ker(m.cols() - e.rank(), m.cols());
    size_t k = 0;
    for (size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        ker.set(k, f, true);
        for (size_t r = 0; r < e.rank(); r++) {
            if (e.reduced.get(r, f)) {
                ker.set(k, e.pivots[r], true);
            }
        }
        k++;
    }
    return ker;
}

/// Incrementally built echelon basis over raw bit rows of a fixed word count.
///
/// Rows are kept fully reduced and keyed by their lowest set bit; reduce()
/// clears those pivot bits, so a row lies in the span iff it reduces to zero.
class Gf2Echelon {
   public:
    explicit Gf2Echelon(size_t num_words) : num_words_(num_words) {
    }

    size_t rank() const {
        return pivots_.size();
    }
    size_t num_words() const {
        return num_words_;
    }

    /// Reduces `row` in place against the stored basis.
    void reduce(std::span<uint64_t> row) const {
        for (size_t i = 0; i < pivots_.size(); i++) {
            size_t p = pivots_[i];
            if ((row[p >> 6] >> (p & 63)) & 1) {
                const uint64_t *src = rows_.data() + i * num_words_;
                for (size_t k = 0; k < num_words_; k++) {
                    row[k] ^= src[k];
                }
            }
        }
    }

    bool contains(std::span<const uint64_t> row) const {
        std::vector<uint64_t> tmp(row.begin(), row.end());
        reduce(tmp);
        return first_bit(tmp) == std::nullopt;
    }

    /// Adds `row`; returns false (and leaves the basis unchanged) when it is
    /// already in the span.
    bool insert(std::span<const uint64_t> row) {
        std::vector<uint64_t> tmp(row.begin(), row.end());
        reduce(tmp);
        auto p = first_bit(tmp);
        if (!p) {
            return false;
        }
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < *p) {
            pos++;
        }
        // Keep the basis fully reduced: no row has a bit at another row's pivot.
        for (size_t i = 0; i < pivots_.size(); i++) {
            uint64_t *dst = rows_.data() + i * num_words_;
            if ((dst[*p >> 6] >> (*p & 63)) & 1) {
                for (size_t k = 0; k < num_words_; k++) {
                    dst[k] ^= tmp[k];
                }
            }
        }
        pivots_.insert(pivots_.begin() + pos, *p);
        rows_.insert(rows_.begin() + pos * num_words_, tmp.begin(), tmp.end());
        return true;
    }

   private:
    static std::optional<size_t> first_bit(std::span<const uint64_t> row) {
        for (size_t k = 0; k < row.size(); k++) {
            if (row[k]) {
                return k * 64 + std::countr_zero(row[k]);
            }
        }
        return std::nullopt;
    }

    size_t num_words_;
    std::vector<size_t> pivots_;
    std::vector<uint64_t> rows_;
};

}  // namespace eaqecc

#endif

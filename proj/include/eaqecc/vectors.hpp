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

#ifndef EAQECC_VECTORS_HPP
#define EAQECC_VECTORS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eaqecc/gf4.hpp"

namespace eaqecc {

inline size_t words_for_bits(size_t bits) {
    return (bits + 63) / 64;
}

/// A vector (a|b) of the symplectic space F_2^{2n}.
///
/// The a-half and b-half are stored as two contiguous word blocks so the
/// symplectic form is one AND-XOR-popcount pass over each block pair. Bits
/// past n in the last word of each half are always zero.
class SymplecticVector {
   public:
    SymplecticVector() = default;
    explicit SymplecticVector(size_t num_qubits)
        : n_(num_qubits), half_words_(words_for_bits(num_qubits)), words_(2 * half_words_, 0) {
    }

    /// Parses "a-bits|b-bits", e.g. "10|01".
    static SymplecticVector from_string(std::string_view text) {
        auto bar = text.find('|');
        if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
            throw std::invalid_argument("symplectic vector must have the form a-bits|b-bits: " + std::string(text));
        }
        auto a = text.substr(0, bar);
        auto b = text.substr(bar + 1);
        if (a.size() != b.size()) {
            throw std::invalid_argument("symplectic vector halves differ in length: " + std::string(text));
        }
        SymplecticVector v(a.size());
        for (size_t i = 0; i < a.size(); i++) {
            v.set_a(i, parse_bit(a[i]));
            v.set_b(i, parse_bit(b[i]));
        }
        return v;
    }

    size_t num_qubits() const {
        return n_;
    }
    size_t half_words() const {
        return half_words_;
    }

    bool a(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    bool b(size_t i) const {
        return (words_[half_words_ + (i >> 6)] >> (i & 63)) & 1;
    }
    void set_a(size_t i, bool value) {
        set_bit(words_[i >> 6], i & 63, value);
    }
    void set_b(size_t i, bool value) {
        set_bit(words_[half_words_ + (i >> 6)], i & 63, value);
    }

    std::span<const uint64_t> a_words() const {
        return {words_.data(), half_words_};
    }
    std::span<const uint64_t> b_words() const {
        return {words_.data() + half_words_, half_words_};
    }
    std::span<const uint64_t> words() const {
        return words_;
    }
    std::span<uint64_t> mutable_words() {
        return words_;
    }

    /// Number of positions i with (a_i, b_i) != (0, 0).
    size_t weight() const {
        size_t w = 0;
        for (size_t k = 0; k < half_words_; k++) {
            w += std::popcount(words_[k] | words_[half_words_ + k]);
        }
        return w;
    }

    bool is_zero() const {
        for (auto w : words_) {
            if (w) {
                return false;
            }
        }
        return true;
    }

    SymplecticVector &operator^=(const SymplecticVector &other) {
        require_same_length(other, "xor");
        for (size_t k = 0; k < words_.size(); k++) {
            words_[k] ^= other.words_[k];
        }
        return *this;
    }

    friend SymplecticVector operator^(SymplecticVector lhs, const SymplecticVector &rhs) {
        lhs ^= rhs;
        return lhs;
    }

    bool operator==(const SymplecticVector &other) const = default;

    std::string str() const {
        std::string out;
        out.reserve(2 * n_ + 1);
        for (size_t i = 0; i < n_; i++) {
            out.push_back(a(i) ? '1' : '0');
        }
        out.push_back('|');
        for (size_t i = 0; i < n_; i++) {
            out.push_back(b(i) ? '1' : '0');
        }
        return out;
    }

    void require_same_length(const SymplecticVector &other, const char *what) const {
        if (n_ != other.n_) {
            throw std::invalid_argument(std::string(what) + ": length mismatch (" + std::to_string(n_) + " vs " +
                                        std::to_string(other.n_) + ")");
        }
    }

   private:
    static bool parse_bit(char c) {
        if (c == '0') {
            return false;
        }
        if (c == '1') {
            return true;
        }
        throw std::invalid_argument(std::string("not a bit: '") + c + "'");
    }
    static void set_bit(uint64_t &word, size_t bit, bool value) {
        word = (word & ~(uint64_t{1} << bit)) | (uint64_t{value} << bit);
    }

    size_t n_ = 0;
    size_t half_words_ = 0;
    std::vector<uint64_t> words_;
};

/// a.b' + b.a' over GF(2).
inline bool symplectic_inner(const SymplecticVector &u, const SymplecticVector &v) {
    u.require_same_length(v, "symplectic_inner");
    auto ua = u.a_words();
    auto ub = u.b_words();
    auto va = v.a_words();
    auto vb = v.b_words();
    uint64_t acc = 0;
    for (size_t k = 0; k < ua.size(); k++) {
        acc ^= (ua[k] & vb[k]) ^ (ub[k] & va[k]);
    }
    return std::popcount(acc) & 1;
}

/// A vector over GF(4), stored with the same bit-pair packing as its
/// symplectic preimage.
class Gf4Vector {
   public:
    Gf4Vector() = default;
    explicit Gf4Vector(size_t length) : bits_(length) {
    }

    static Gf4Vector from_string(std::string_view text) {
        Gf4Vector v(text.size());
        for (size_t i = 0; i < text.size(); i++) {
            v.set(i, gf4_from_char(text[i]));
        }
        return v;
    }

    size_t size() const {
        return bits_.num_qubits();
    }

    Gf4 operator[](size_t i) const {
        return gf4_from_bits(bits_.a(i), bits_.b(i));
    }
    void set(size_t i, Gf4 x) {
        bits_.set_a(i, gf4_a_bit(x));
        bits_.set_b(i, gf4_b_bit(x));
    }

    /// Number of nonzero symbols.
    size_t weight() const {
        return bits_.weight();
    }
    bool is_zero() const {
        return bits_.is_zero();
    }

    Gf4Vector &operator+=(const Gf4Vector &other) {
        bits_ ^= other.bits_;
        return *this;
    }
    friend Gf4Vector operator+(Gf4Vector lhs, const Gf4Vector &rhs) {
        lhs += rhs;
        return lhs;
    }

    /// Symbol-wise product by a scalar.
    Gf4Vector scaled(Gf4 s) const {
        Gf4Vector out(size());
        for (size_t i = 0; i < size(); i++) {
            out.set(i, gf4_mul(s, (*this)[i]));
        }
        return out;
    }

    Gf4Vector conjugated() const {
        Gf4Vector out(size());
        for (size_t i = 0; i < size(); i++) {
            out.set(i, gf4_conj((*this)[i]));
        }
        return out;
    }

    bool operator==(const Gf4Vector &other) const = default;

    std::string str() const {
        std::string out;
        out.reserve(size());
        for (size_t i = 0; i < size(); i++) {
            out.push_back(gf4_char((*this)[i]));
        }
        return out;
    }

   private:
    friend Gf4Vector phi(const SymplecticVector &v);
    friend SymplecticVector phi_inv(const Gf4Vector &w);
    explicit Gf4Vector(SymplecticVector bits) : bits_(std::move(bits)) {
    }

    SymplecticVector bits_;
};

/// phi((a|b)) = w*a + W*b.
inline Gf4Vector phi(const SymplecticVector &v) {
    return Gf4Vector(v);
}

inline SymplecticVector phi_inv(const Gf4Vector &w) {
    return w.bits_;
}

inline size_t symbol_weight(const Gf4Vector &v) {
    return v.weight();
}

namespace internal {

inline void require_same_size(const Gf4Vector &u, const Gf4Vector &v, const char *what) {
    if (u.size() != v.size()) {
        throw std::invalid_argument(std::string(what) + ": length mismatch (" + std::to_string(u.size()) + " vs " +
                                    std::to_string(v.size()) + ")");
    }
}

}  // namespace internal

/// sum_j u_j v_j^2 + u_j^2 v_j, evaluated symbol by symbol in GF(4).
inline bool trace_inner(const Gf4Vector &u, const Gf4Vector &v) {
    internal::require_same_size(u, v, "trace_inner");
    Gf4 acc = Gf4::Zero;
    for (size_t j = 0; j < u.size(); j++) {
        acc = gf4_add(acc, gf4_mul(u[j], gf4_conj(v[j])));
        acc = gf4_add(acc, gf4_mul(gf4_conj(u[j]), v[j]));
    }
    if (acc != Gf4::Zero && acc != Gf4::One) {
        throw std::logic_error("trace_inner: sum left GF(2)");
    }
    return acc == Gf4::One;
}

/// sum_j u_j v_j^2.
inline Gf4 hermitian_inner(const Gf4Vector &u, const Gf4Vector &v) {
    internal::require_same_size(u, v, "hermitian_inner");
    Gf4 acc = Gf4::Zero;
    for (size_t j = 0; j < u.size(); j++) {
        acc = gf4_add(acc, gf4_mul(u[j], gf4_conj(v[j])));
    }
    return acc;
}

}  // namespace eaqecc

#endif

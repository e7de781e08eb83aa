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

#ifndef EAQECC_LINEAR_CODE_HPP
#define EAQECC_LINEAR_CODE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "eaqecc/additive_code.hpp"
#include "eaqecc/gf4.hpp"
#include "eaqecc/vectors.hpp"

namespace eaqecc {

using Gf4Matrix = std::vector<std::vector<Gf4>>;

struct Gf4RowEchelon {
    Gf4Matrix reduced;
    std::vector<size_t> pivots;
    size_t rank() const {
        return pivots.size();
    }
};

/// Gauss-Jordan over GF(4) with leading entries scaled to 1.
inline Gf4RowEchelon rref_gf4(Gf4Matrix m, size_t cols) {
    Gf4RowEchelon out;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < m.size(); c++) {
        size_t p = r;
        while (p < m.size() && m[p][c] == Gf4::Zero) {
            p++;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[r], m[p]);
        Gf4 inv = gf4_inv(m[r][c]);
        for (auto &x : m[r]) {
            x = gf4_mul(inv, x);
        }
        for (size_t i = 0; i < m.size(); i++) {
            if (i == r || m[i][c] == Gf4::Zero) {
                continue;
            }
            Gf4 f = m[i][c];
            for (size_t j = 0; j < cols; j++) {
                m[i][j] = gf4_add(m[i][j], gf4_mul(f, m[r][j]));
            }
        }
        out.pivots.push_back(c);
        r++;
    }
    out.reduced = std::move(m);
    return out;
}

/// Basis of the right null space {x : M x = 0} over GF(4).
inline std::vector<Gf4Vector> kernel_gf4(const Gf4Matrix &m, size_t cols) {
    auto e = rref_gf4(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) {
        is_pivot[c] = true;
    }
    std::vector<Gf4Vector> out;
    for (size_t f = 0; f < cols; f++) {
        if (is_pivot[f]) {
            continue;
        }
        Gf4Vector x(cols);
        x.set(f, Gf4::One);
        for (size_t r = 0; r < e.rank(); r++) {
            // char 2: -a = a
            x.set(e.pivots[r], e.reduced[r][f]);
        }
        out.push_back(std::move(x));
    }
    return out;
}

namespace internal {

inline Gf4Matrix to_gf4_rows(const std::vector<Gf4Vector> &rows) {
    Gf4Matrix m;
    for (const auto &v : rows) {
        std::vector<Gf4> row(v.size());
        for (size_t j = 0; j < v.size(); j++) {
            row[j] = v[j];
        }
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace internal

/// A GF(4)-linear code D = [n, k]_4.
class LinearCode {
   public:
    explicit LinearCode(size_t length = 0) : n_(length) {
    }

    LinearCode(size_t length, std::vector<Gf4Vector> basis) : n_(length), basis_(std::move(basis)) {
        for (const auto &b : basis_) {
            if (b.size() != n_) {
                throw std::invalid_argument("LinearCode: basis vector length differs from code length");
            }
        }
        if (rref_gf4(internal::to_gf4_rows(basis_), n_).rank() != basis_.size()) {
            throw std::invalid_argument("LinearCode: basis vectors are not GF(4)-independent");
        }
    }

    static LinearCode from_strings(size_t length, const std::vector<std::string> &rows) {
        std::vector<Gf4Vector> basis;
        for (const auto &r : rows) {
            basis.push_back(Gf4Vector::from_string(r));
        }
        return LinearCode(length, std::move(basis));
    }

    /// Rejects codes not closed under multiplication by w.
    static LinearCode from_additive(const AdditiveCode &c) {
        for (const auto &g : c.generators()) {
            if (!c.contains(g.scaled(Gf4::Omega))) {
                throw std::invalid_argument("LinearCode::from_additive: code is not GF(4)-linear");
            }
        }
        auto e = rref_gf4(internal::to_gf4_rows(c.generators()), c.length());
        std::vector<Gf4Vector> basis;
        for (size_t r = 0; r < e.rank(); r++) {
            Gf4Vector v(c.length());
            for (size_t j = 0; j < c.length(); j++) {
                v.set(j, e.reduced[r][j]);
            }
            basis.push_back(std::move(v));
        }
        return LinearCode(c.length(), std::move(basis));
    }

    size_t length() const {
        return n_;
    }
    size_t k() const {
        return basis_.size();
    }
    const std::vector<Gf4Vector> &basis() const {
        return basis_;
    }

    /// The same set viewed as an (n, 2^{2k}) additive code.
    AdditiveCode as_additive() const {
        std::vector<Gf4Vector> gens;
        for (const auto &b : basis_) {
            gens.push_back(b);
            gens.push_back(b.scaled(Gf4::Omega));
        }
        return AdditiveCode(n_, std::move(gens));
    }

   private:
    size_t n_;
    std::vector<Gf4Vector> basis_;
};

/// H_ij = (b_i, b_j)_h.
inline Gf4Matrix hermitian_gram(const LinearCode &d) {
    Gf4Matrix h(d.k(), std::vector<Gf4>(d.k(), Gf4::Zero));
    for (size_t i = 0; i < d.k(); i++) {
        for (size_t j = 0; j < d.k(); j++) {
            h[i][j] = hermitian_inner(d.basis()[i], d.basis()[j]);
        }
    }
    return h;
}

/// D^{perp_h}, solved directly over GF(4).
inline LinearCode hermitian_dual(const LinearCode &d) {
    Gf4Matrix m;
    for (const auto &b : d.basis()) {
        auto c = b.conjugated();
        std::vector<Gf4> row(d.length());
        for (size_t j = 0; j < d.length(); j++) {
            row[j] = c[j];
        }
        m.push_back(std::move(row));
    }
    return LinearCode(d.length(), kernel_gf4(m, d.length()));
}

/// R_h(D) = D ∩ D^{perp_h}.
inline LinearCode hermitian_radical(const LinearCode &d) {
    auto h = hermitian_gram(d);
    // alpha with sum_i alpha_i H_ij = 0 for all j: kernel of H^T.
    Gf4Matrix ht(d.k(), std::vector<Gf4>(d.k(), Gf4::Zero));
    for (size_t i = 0; i < d.k(); i++) {
        for (size_t j = 0; j < d.k(); j++) {
            ht[j][i] = h[i][j];
        }
    }
    std::vector<Gf4Vector> out;
    for (const auto &alpha : kernel_gf4(ht, d.k())) {
        Gf4Vector v(d.length());
        for (size_t i = 0; i < d.k(); i++) {
            v += d.basis()[i].scaled(alpha[i]);
        }
        out.push_back(std::move(v));
    }
    return LinearCode(d.length(), std::move(out));
}

inline bool is_hermitian_self_orthogonal(const LinearCode &d) {
    for (const auto &row : hermitian_gram(d)) {
        for (auto x : row) {
            if (x != Gf4::Zero) {
                return false;
            }
        }
    }
    return true;
}

inline bool is_hermitian_lcd(const LinearCode &d) {
    return hermitian_radical(d).k() == 0;
}

}  // namespace eaqecc

#endif

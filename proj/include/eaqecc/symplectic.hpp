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

#ifndef EAQECC_SYMPLECTIC_HPP
#define EAQECC_SYMPLECTIC_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eaqecc/gf2_matrix.hpp"
#include "eaqecc/vectors.hpp"

namespace eaqecc {

/// A GF(2)-subspace of F_2^{2n} held as a list of independent basis vectors.
class Subspace {
   public:
    explicit Subspace(size_t num_qubits = 0) : n_(num_qubits) {
    }

    /// Span of `vectors`; dependent vectors are dropped, the rest keep their order.
    static Subspace span(size_t num_qubits, const std::vector<SymplecticVector> &vectors) {
        Subspace s(num_qubits);
        Gf2Echelon ech(2 * words_for_bits(num_qubits));
        for (const auto &v : vectors) {
            if (v.num_qubits() != num_qubits) {
                throw std::invalid_argument("Subspace::span: vector length mismatch");
            }
            if (ech.insert(v.words())) {
                s.basis_.push_back(v);
            }
        }
        return s;
    }

    /// Like span(), but rejects dependent input.
    static Subspace from_basis(size_t num_qubits, std::vector<SymplecticVector> basis) {
        auto s = span(num_qubits, basis);
        if (s.dim() != basis.size()) {
            throw std::invalid_argument("Subspace::from_basis: basis vectors are linearly dependent (rank " +
                                        std::to_string(s.dim()) + " of " + std::to_string(basis.size()) + ")");
        }
        return s;
    }

    static Subspace full(size_t num_qubits) {
        std::vector<SymplecticVector> basis;
        for (size_t i = 0; i < num_qubits; i++) {
            SymplecticVector x(num_qubits);
            x.set_a(i, true);
            basis.push_back(std::move(x));
        }
        for (size_t i = 0; i < num_qubits; i++) {
            SymplecticVector z(num_qubits);
            z.set_b(i, true);
            basis.push_back(std::move(z));
        }
        return from_basis(num_qubits, std::move(basis));
    }

    size_t num_qubits() const {
        return n_;
    }
    size_t dim() const {
        return basis_.size();
    }
    const std::vector<SymplecticVector> &basis() const {
        return basis_;
    }

    Gf2Matrix matrix() const {
        return Gf2Matrix::from_symplectic(basis_, n_);
    }

    bool contains(const SymplecticVector &v) const {
        Gf2Echelon ech(2 * words_for_bits(n_));
        for (const auto &b : basis_) {
            ech.insert(b.words());
        }
        return ech.contains(v.words());
    }

    bool contains(const Subspace &other) const {
        Gf2Echelon ech(2 * words_for_bits(n_));
        for (const auto &b : basis_) {
            ech.insert(b.words());
        }
        for (const auto &v : other.basis_) {
            if (!ech.contains(v.words())) {
                return false;
            }
        }
        return true;
    }

    /// Equality of the spanned spaces (compares reduced row echelon forms).
    bool operator==(const Subspace &other) const {
        if (n_ != other.n_ || dim() != other.dim()) {
            return false;
        }
        return rref_gf2(matrix()).reduced == rref_gf2(other.matrix()).reduced;
    }

   private:
    size_t n_;
    std::vector<SymplecticVector> basis_;
};

/// G_ij = <v_i, v_j>_s.
inline Gf2Matrix symplectic_gram(const std::vector<SymplecticVector> &vectors) {
    Gf2Matrix g(vectors.size(), vectors.size());
    for (size_t i = 0; i < vectors.size(); i++) {
        for (size_t j = i + 1; j < vectors.size(); j++) {
            if (symplectic_inner(vectors[i], vectors[j])) {
                g.set(i, j, true);
                g.set(j, i, true);
            }
        }
    }
    return g;
}

namespace internal {

inline std::vector<SymplecticVector> combine_rows(const Gf2Matrix &coeffs, const std::vector<SymplecticVector> &basis,
                                                  size_t num_qubits) {
    std::vector<SymplecticVector> out;
    for (size_t r = 0; r < coeffs.rows(); r++) {
        SymplecticVector v(num_qubits);
        for (size_t i = 0; i < basis.size(); i++) {
            if (coeffs.get(r, i)) {
                v ^= basis[i];
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace internal

/// S^{perp_s} = {x : <x, s>_s = 0 for all s in S}.
inline Subspace symplectic_dual(const Subspace &s) {
    size_t n = s.num_qubits();
    // <x, s> = x_a . s_b + x_b . s_a, so the dual is the kernel of rows (s_b | s_a).
    Gf2Matrix swapped(s.dim(), 2 * n);
    for (size_t r = 0; r < s.dim(); r++) {
        const auto &v = s.basis()[r];
        for (size_t i = 0; i < n; i++) {
            swapped.set(r, i, v.b(i));
            swapped.set(r, n + i, v.a(i));
        }
    }
    auto ker = kernel_gf2(swapped);
    std::vector<SymplecticVector> basis;
    for (size_t r = 0; r < ker.rows(); r++) {
        basis.push_back(ker.row_as_symplectic(r));
    }
    return Subspace::from_basis(n, std::move(basis));
}

inline Subspace intersect(const Subspace &u, const Subspace &v) {
    if (u.num_qubits() != v.num_qubits()) {
        throw std::invalid_argument("intersect: length mismatch");
    }
    size_t n = u.num_qubits();
    // (alpha, beta) with alpha.U + beta.V = 0 gives alpha.U in both spaces.
    std::vector<SymplecticVector> stacked = u.basis();
    stacked.insert(stacked.end(), v.basis().begin(), v.basis().end());
    auto rel = kernel_gf2(Gf2Matrix::from_symplectic(stacked, n).transposed());
    Gf2Matrix alpha(rel.rows(), u.dim());
    for (size_t r = 0; r < rel.rows(); r++) {
        for (size_t i = 0; i < u.dim(); i++) {
            alpha.set(r, i, rel.get(r, i));
        }
    }
    return Subspace::span(n, internal::combine_rows(alpha, u.basis(), n));
}

inline Subspace sum(const Subspace &u, const Subspace &v) {
    std::vector<SymplecticVector> all = u.basis();
    all.insert(all.end(), v.basis().begin(), v.basis().end());
    return Subspace::span(u.num_qubits(), all);
}

/// S_I = S ∩ S^{perp_s}, computed from the kernel of the Gram matrix.
inline Subspace radical_subspace(const Subspace &s) {
    auto ker = kernel_gf2(symplectic_gram(s.basis()));
    return Subspace::from_basis(s.num_qubits(), internal::combine_rows(ker, s.basis(), s.num_qubits()));
}

/// c = (dim S - dim S_I) / 2, the number of hyperbolic pairs.
inline size_t entanglement_degree(const Subspace &s) {
    size_t r = rank_gf2(symplectic_gram(s.basis()));
    if (r % 2) {
        throw std::logic_error("entanglement_degree: odd rank of an alternating form");
    }
    return r / 2;
}

/// S = S_I ⊕ S_E with S_E in hyperbolic standard form.
struct SgsDecomposition {
    std::vector<SymplecticVector> isotropic_basis;
    std::vector<std::pair<SymplecticVector, SymplecticVector>> hyperbolic_pairs;

    size_t l() const {
        return isotropic_basis.size();
    }
    size_t c() const {
        return hyperbolic_pairs.size();
    }
};

/// Symplectic Gram-Schmidt.
///
/// Vectors are visited in basis order. The current vector is paired with the
/// first later vector it anticommutes with; the pair is then projected out of
/// every remaining vector. A vector that commutes with all remaining vectors
/// joins the isotropic part.
inline SgsDecomposition symplectic_gram_schmidt(const Subspace &s) {
    SgsDecomposition out;
    std::vector<SymplecticVector> rest = s.basis();
    while (!rest.empty()) {
        SymplecticVector e = std::move(rest.front());
        rest.erase(rest.begin());
        size_t partner = rest.size();
        for (size_t j = 0; j < rest.size(); j++) {
            if (symplectic_inner(e, rest[j])) {
                partner = j;
                break;
            }
        }
        if (partner == rest.size()) {
            out.isotropic_basis.push_back(std::move(e));
            continue;
        }
        SymplecticVector f = std::move(rest[partner]);
        rest.erase(rest.begin() + partner);
        for (auto &u : rest) {
            bool ue = symplectic_inner(u, e);
            bool uf = symplectic_inner(u, f);
            if (uf) {
                u ^= e;
            }
            if (ue) {
                u ^= f;
            }
        }
        out.hyperbolic_pairs.emplace_back(std::move(e), std::move(f));
    }
    return out;
}

}  // namespace eaqecc

#endif

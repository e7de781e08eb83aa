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

#ifndef EAQECC_ADDITIVE_CODE_HPP
#define EAQECC_ADDITIVE_CODE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "eaqecc/symplectic.hpp"
#include "eaqecc/vectors.hpp"

namespace eaqecc {

/// An additive (GF(2)-linear) code C = (n, 2^m) over GF(4).
class AdditiveCode {
   public:
    explicit AdditiveCode(size_t length = 0) : n_(length) {
    }

    /// Generators must be GF(2)-independent and of length `length`.
    AdditiveCode(size_t length, std::vector<Gf4Vector> generators) : n_(length), generators_(std::move(generators)) {
        Gf2Echelon ech(2 * words_for_bits(n_));
        for (const auto &g : generators_) {
            if (g.size() != n_) {
                throw std::invalid_argument("AdditiveCode: generator length " + std::to_string(g.size()) +
                                            " differs from code length " + std::to_string(n_));
            }
            if (!ech.insert(phi_inv(g).words())) {
                throw std::invalid_argument("AdditiveCode: generators are not GF(2)-independent");
            }
        }
    }

    static AdditiveCode from_strings(size_t length, const std::vector<std::string> &rows) {
        std::vector<Gf4Vector> gens;
        for (const auto &r : rows) {
            gens.push_back(Gf4Vector::from_string(r));
        }
        return AdditiveCode(length, std::move(gens));
    }

    static AdditiveCode spanned_by(size_t length, const std::vector<Gf4Vector> &vectors) {
        std::vector<SymplecticVector> pre;
        for (const auto &v : vectors) {
            pre.push_back(phi_inv(v));
        }
        return from_subspace(Subspace::span(length, pre));
    }

    static AdditiveCode from_subspace(const Subspace &s) {
        std::vector<Gf4Vector> gens;
        for (const auto &v : s.basis()) {
            gens.push_back(phi(v));
        }
        AdditiveCode c(s.num_qubits());
        c.generators_ = std::move(gens);
        return c;
    }

    static AdditiveCode full(size_t length) {
        return from_subspace(Subspace::full(length));
    }

    Subspace to_subspace() const {
        std::vector<SymplecticVector> pre;
        for (const auto &g : generators_) {
            pre.push_back(phi_inv(g));
        }
        return Subspace::from_basis(n_, std::move(pre));
    }

    size_t length() const {
        return n_;
    }
    /// log2 of the code size.
    size_t m() const {
        return generators_.size();
    }
    const std::vector<Gf4Vector> &generators() const {
        return generators_;
    }

    bool contains(const Gf4Vector &v) const {
        return to_subspace().contains(phi_inv(v));
    }
    bool contains(const AdditiveCode &other) const {
        return to_subspace().contains(other.to_subspace());
    }
    bool operator==(const AdditiveCode &other) const {
        return to_subspace() == other.to_subspace();
    }

   private:
    size_t n_;
    std::vector<Gf4Vector> generators_;
};

/// C^{perp_t}, via the isometry with the symplectic dual.
inline AdditiveCode trace_dual(const AdditiveCode &c) {
    return AdditiveCode::from_subspace(symplectic_dual(c.to_subspace()));
}

/// R_t(C) = C ∩ C^{perp_t}.
inline AdditiveCode trace_radical(const AdditiveCode &c) {
    return AdditiveCode::from_subspace(radical_subspace(c.to_subspace()));
}

struct CodeClass {
    bool trace_self_orthogonal = false;
    bool acd = false;
    bool dual_containing = false;
};

/// The zero code reports acd = true since its radical is literally {0}.
inline CodeClass classify(const AdditiveCode &c) {
    auto s = c.to_subspace();
    size_t rad = s.dim() - 2 * entanglement_degree(s);
    CodeClass out;
    out.trace_self_orthogonal = rad == c.m();
    out.acd = rad == 0;
    // C^{perp_t} ⊆ C iff the radical already has the dual's dimension.
    out.dual_containing = rad == 2 * c.length() - c.m();
    return out;
}

struct AdditiveDecomposition {
    AdditiveCode radical;  // R_t(C)
    AdditiveCode ace;      // an ACD complement C_e
};

/// C = R_t(C) ⊕ C_e, transported from the symplectic Gram-Schmidt split.
inline AdditiveDecomposition decompose_additive(const AdditiveCode &c) {
    auto sgs = symplectic_gram_schmidt(c.to_subspace());
    std::vector<SymplecticVector> pairs;
    for (auto &[e, f] : sgs.hyperbolic_pairs) {
        pairs.push_back(e);
        pairs.push_back(f);
    }
    return {
        AdditiveCode::from_subspace(Subspace::from_basis(c.length(), sgs.isotropic_basis)),
        AdditiveCode::from_subspace(Subspace::from_basis(c.length(), pairs)),
    };
}

}  // namespace eaqecc

#endif

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

#ifndef EAQECC_EA_PARAMS_HPP
#define EAQECC_EA_PARAMS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eaqecc/additive_code.hpp"
#include "eaqecc/linear_code.hpp"
#include "eaqecc/min_weight.hpp"

namespace eaqecc {

/// [[n, k, d]] of a stabilizer code (or a receiver-side protector [[m, k_b, d_b]]).
struct QeccParams {
    size_t n = 0;
    size_t k = 0;
    std::optional<size_t> d;
    // k = 0: N(S) \ S is empty and d is the minimum weight of S itself.
    bool degenerate_k0 = false;

    std::string str() const {
        return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + (d ? std::to_string(*d) : "?") + "]]";
    }
    bool operator==(const QeccParams &) const = default;
};

/// [[n, k, d_ea; c]] of an entanglement-assisted code; l is the log-size of
/// the isotropic part of the EA-stabilizer.
struct EaqeccParams {
    size_t n = 0;
    size_t k = 0;
    std::optional<size_t> d;
    size_t c = 0;
    size_t l = 0;
    bool degenerate_k0 = false;
    bool equivalent_to_qecc = false;

    std::string str() const {
        return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + (d ? std::to_string(*d) : "?") + ";" +
               std::to_string(c) + "]]";
    }
    bool operator==(const EaqeccParams &) const = default;
};

/// [[n,k,d;c]] + [[m,k_b,d_b]].
struct CombinationParams {
    EaqeccParams ea;
    QeccParams protector;

    std::string str() const {
        return ea.str() + "+" + protector.str();
    }
};

struct MatchFlags {
    bool matches = false;
    bool faithful = false;
    bool proper = false;
};

struct BoundResult {
    size_t s = 0;
    size_t m = 0;
    uint64_t M_s = 0;
};

class MatchingViolation : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parameters of the stabilizer code fixed by a trace self-orthogonal S.
inline QeccParams qecc_params(const AdditiveCode &s, bool with_distance, const EnumerationOptions &opts = {}) {
    if (!classify(s).trace_self_orthogonal) {
        throw std::invalid_argument("qecc_params: stabilizer image is not trace self-orthogonal");
    }
    QeccParams p;
    p.n = s.length();
    p.k = s.length() - s.m();
    if (with_distance) {
        if (p.k == 0) {
            p.degenerate_k0 = true;
            p.d = min_weight_auto(s, nullptr, opts).min_weight;
        } else {
            p.d = min_weight_auto(trace_dual(s), &s, opts).min_weight;
        }
    }
    return p;
}

/// Parameters of the EAQECC with EA-stabilizer image S (any additive code).
inline EaqeccParams eaqecc_params(const AdditiveCode &s, bool with_distance, const EnumerationOptions &opts = {}) {
    auto sub = s.to_subspace();
    EaqeccParams p;
    p.n = s.length();
    p.c = entanglement_degree(sub);
    p.l = s.m() - 2 * p.c;
    p.k = p.n - p.c - p.l;
    if (with_distance) {
        auto dual = trace_dual(s);
        if (p.k == 0) {
            p.degenerate_k0 = true;
            if (dual.m() > 0) {
                p.d = min_weight_auto(dual, nullptr, opts).min_weight;
            }
        } else {
            auto rad = trace_radical(s);
            p.d = min_weight_auto(dual, &rad, opts).min_weight;
        }
    }
    return p;
}

inline MatchFlags match_check(const EaqeccParams &ea, const QeccParams &b) {
    MatchFlags f;
    f.matches = b.k >= ea.c;
    f.faithful = f.matches && b.d && *b.d >= 3;
    f.proper = b.k == ea.c;
    return f;
}

/// M_s = (4^s - 1) / 3.
inline uint64_t protector_level_size(size_t s) {
    return ((uint64_t{1} << (2 * s)) - 1) / 3;
}

/// Length m of a guaranteed [[m, c, 3]] protector for c ebits.
///
/// s >= 2 is the level with M_{s-1} < c <= M_s. The short form m = c + 2s is
/// used only where it also satisfies the distance-3 quantum Hamming count
/// 4^s >= 1 + 3m; otherwise m = c + 2(s + 1).
inline BoundResult protector_bound(size_t c) {
    if (c < 1) {
        throw std::invalid_argument("protector_bound: c must be at least 1");
    }
    size_t s = 2;
    while (protector_level_size(s) < c) {
        s++;
    }
    uint64_t ms = protector_level_size(s);
    uint64_t prev = protector_level_size(s - 1);
    bool short_case = (prev < c && c + 5 <= ms) || c == prev;
    size_t m = c + 2 * s;
    if (!short_case || (uint64_t{1} << (2 * s)) < 1 + 3 * uint64_t{m}) {
        m = c + 2 * (s + 1);
    }
    return {s, m, ms};
}

/// [[n,k,d;c]] + [[m,k_b,d_b]] from an EA-stabilizer image S and a protector stabilizer Sb.
inline CombinationParams combination_params(const AdditiveCode &s, const AdditiveCode &sb, bool with_distance,
                                            const EnumerationOptions &opts = {}) {
    auto ea = eaqecc_params(s, false);
    auto b = qecc_params(sb, false);
    if (b.k < ea.c) {
        throw MatchingViolation("combination_params: k^b < c (" + std::to_string(b.k) + " < " +
                                std::to_string(ea.c) + ")");
    }
    if (with_distance) {
        ea = eaqecc_params(s, true, opts);
        b = qecc_params(sb, true, opts);
    }
    return {ea, b};
}

/// Linear variant: D = [n, u]_4 with Hermitian radical of dimension r, and a
/// Hermitian self-orthogonal protector Db = [m, v]_4.
inline CombinationParams linear_combination_params(const LinearCode &d, const LinearCode &db, bool with_distance,
                                                   const EnumerationOptions &opts = {}) {
    if (!is_hermitian_self_orthogonal(db)) {
        throw std::invalid_argument("linear_combination_params: protector code is not Hermitian self-orthogonal");
    }
    size_t u = d.k();
    size_t r = hermitian_radical(d).k();
    EaqeccParams ea;
    ea.n = d.length();
    ea.c = u - r;
    ea.l = 2 * r;
    ea.k = ea.n - ea.c - 2 * r;
    QeccParams b;
    b.n = db.length();
    b.k = db.length() - 2 * db.k();
    if (b.k < ea.c) {
        throw MatchingViolation("linear_combination_params: k^b < c (" + std::to_string(b.k) + " < " +
                                std::to_string(ea.c) + ")");
    }
    if (with_distance) {
        ea.d = eaqecc_params(d.as_additive(), true, opts).d;
        b = qecc_params(db.as_additive(), true, opts);
    }
    return {ea, b};
}

/// EAQECCs obtained by moving c = 1..u qubits of a pure [[N, N-2u, d]] code
/// (from an [N, u]_4 Hermitian self-orthogonal code with dual distance d) to
/// the receiver.
inline std::vector<EaqeccParams> so_family(size_t big_n, long u, size_t d_dual) {
    if (u < 0) {
        throw std::invalid_argument("so_family: u must be nonnegative");
    }
    if (big_n < 2 * static_cast<size_t>(u)) {
        throw std::invalid_argument("so_family: N < 2u");
    }
    std::vector<EaqeccParams> out;
    for (size_t c = 1; c <= static_cast<size_t>(u); c++) {
        EaqeccParams p;
        p.n = big_n - c;
        p.k = big_n - 2 * static_cast<size_t>(u);
        p.d = d_dual;
        p.c = c;
        p.l = p.n - p.k - c;
        p.equivalent_to_qecc = true;
        out.push_back(p);
    }
    return out;
}

}  // namespace eaqecc

#endif

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

#ifndef EAQECC_THEOREM43_HPP
#define EAQECC_THEOREM43_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "eaqecc/additive_code.hpp"
#include "eaqecc/ea_params.hpp"
#include "eaqecc/min_weight.hpp"

namespace eaqecc {

/// C = (n, 2^l) with generator G, C' = (n, 2^{2k}) with generator G', and
/// E = (m, 2^{2k}) whose rows are paired with those of G'.
struct Theorem43Input {
    AdditiveCode c;
    AdditiveCode cprime;
    AdditiveCode e;
};

struct Theorem43Build {
    AdditiveCode m;  // rows [G|0 ; G'|E]
    EaqeccParams params;
    std::optional<size_t> d1;  // min weight of D = C + C'
    std::optional<size_t> d2;  // min weight of E
    std::optional<bool> bound_ok;
    size_t c_sgs = 0;  // entanglement degree of M^{perp_t}, by symplectic Gram-Schmidt
};

/// A precondition of the builder failed; `kind` names which one.
class Theorem43Error : public std::invalid_argument {
   public:
    Theorem43Error(std::string kind, const std::string &detail)
        : std::invalid_argument(kind + ": " + detail), kind_(std::move(kind)) {
    }
    const std::string &kind() const {
        return kind_;
    }

   private:
    std::string kind_;
};

inline Gf4Vector concat(const Gf4Vector &x, const Gf4Vector &y) {
    Gf4Vector out(x.size() + y.size());
    for (size_t i = 0; i < x.size(); i++) {
        out.set(i, x[i]);
    }
    for (size_t i = 0; i < y.size(); i++) {
        out.set(x.size() + i, y[i]);
    }
    return out;
}

inline Theorem43Build theorem43_build(const Theorem43Input &in, bool with_distance,
                                      const EnumerationOptions &opts = {}) {
    size_t n = in.c.length();
    size_t m = in.e.length();
    if (in.cprime.length() != n) {
        throw Theorem43Error("length mismatch", "C has length " + std::to_string(n) + ", C' has length " +
                                                    std::to_string(in.cprime.length()));
    }
    if (in.cprime.m() != in.e.m()) {
        throw Theorem43Error("row count mismatch", "G' has " + std::to_string(in.cprime.m()) + " rows, E has " +
                                                       std::to_string(in.e.m()));
    }
    if (in.cprime.m() % 2) {
        throw Theorem43Error("row count mismatch", "G' must have an even number 2k of rows");
    }
    std::vector<Gf4Vector> d_rows = in.c.generators();
    d_rows.insert(d_rows.end(), in.cprime.generators().begin(), in.cprime.generators().end());
    AdditiveCode d;
    try {
        d = AdditiveCode(n, d_rows);
    } catch (const std::invalid_argument &) {
        throw Theorem43Error("dependent rows", "the rows of G and G' are not jointly independent");
    }
    for (const auto &x : in.c.generators()) {
        for (const auto &y : d.generators()) {
            if (trace_inner(x, y)) {
                throw Theorem43Error("chain violation", "D = C + C' is not contained in the trace dual of C");
            }
        }
    }
    std::vector<Gf4Vector> paired;
    for (size_t i = 0; i < in.e.m(); i++) {
        paired.push_back(concat(in.cprime.generators()[i], in.e.generators()[i]));
    }
    AdditiveCode pe(n + m, paired);
    if (!classify(pe).acd) {
        throw Theorem43Error("ACD violation", "(G'|E) does not generate an ACD code");
    }

    std::vector<Gf4Vector> rows;
    Gf4Vector pad(m);
    for (const auto &g : in.c.generators()) {
        rows.push_back(concat(g, pad));
    }
    rows.insert(rows.end(), paired.begin(), paired.end());

    Theorem43Build out;
    out.m = AdditiveCode(n + m, rows);
    size_t l = in.c.m();
    size_t k = in.cprime.m() / 2;
    out.params.n = n + m;
    out.params.k = k;
    out.params.l = l;
    out.params.c = n + m - l - k;
    out.c_sgs = symplectic_gram_schmidt(trace_dual(out.m).to_subspace()).c();
    if (with_distance) {
        out.params.d = min_weight(out.m, trace_radical(out.m), opts).min_weight;
        out.d1 = min_weight(d, opts).min_weight;
        out.d2 = min_weight(in.e, opts).min_weight;
        out.bound_ok = *out.params.d >= *out.d1 + *out.d2;
    }
    return out;
}

struct Theorem43Found {
    Theorem43Input input;
    Theorem43Build build;
    uint64_t trial = 0;
};

namespace internal {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Per-trial generator, so any trial can be replayed on its own.
inline std::mt19937_64 trial_rng(uint64_t seed, uint64_t trial) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ trial));
}

/// A uniformly random ordered basis of span(gens).
inline std::vector<Gf4Vector> random_basis(const std::vector<Gf4Vector> &gens, size_t n, std::mt19937_64 &rng) {
    Gf2Echelon ech(2 * words_for_bits(n));
    std::vector<Gf4Vector> out;
    while (out.size() < gens.size()) {
        Gf4Vector v(n);
        uint64_t bits = 0;
        for (size_t i = 0; i < gens.size(); i++) {
            if (i % 64 == 0) {
                bits = rng();
            }
            if ((bits >> (i % 64)) & 1) {
                v += gens[i];
            }
        }
        if (!v.is_zero() && ech.insert(phi_inv(v).words())) {
            out.push_back(std::move(v));
        }
    }
    return out;
}

/// Fisher-Yates with a modulo draw; the output depends only on the engine.
template <typename T>
void shuffle_portable(std::vector<T> &v, std::mt19937_64 &rng) {
    for (size_t i = v.size(); i > 1; i--) {
        std::swap(v[i - 1], v[rng() % i]);
    }
}

}  // namespace internal

/// Trial t draws a random basis of D, takes its first split_l rows as G and
/// the rest as G', and pairs them with a random row order of E. Returns the
/// first trial whose build reaches target_d.
inline std::optional<Theorem43Found> search_theorem43(const AdditiveCode &d, size_t split_l, const AdditiveCode &e,
                                                      size_t target_d, uint64_t budget, uint64_t seed,
                                                      const EnumerationOptions &opts = {}) {
    if (!classify(d).trace_self_orthogonal) {
        throw std::invalid_argument("search_theorem43: D must be trace self-orthogonal");
    }
    if (split_l > d.m() || d.m() - split_l != e.m()) {
        throw std::invalid_argument("search_theorem43: split_l + 2k must equal log2|D| with 2k = log2|E|");
    }
    if (!classify(e).acd) {
        throw std::invalid_argument("search_theorem43: E must be ACD");
    }
    size_t n = d.length();
    for (uint64_t t = 0; t < budget; t++) {
        auto rng = internal::trial_rng(seed, t);
        auto basis = internal::random_basis(d.generators(), n, rng);
        auto erows = e.generators();
        internal::shuffle_portable(erows, rng);
        Theorem43Input in{
            AdditiveCode(n, std::vector<Gf4Vector>(basis.begin(), basis.begin() + split_l)),
            AdditiveCode(n, std::vector<Gf4Vector>(basis.begin() + split_l, basis.end())),
            AdditiveCode(e.length(), erows),
        };
        Theorem43Build b;
        try {
            b = theorem43_build(in, true, opts);
        } catch (const Theorem43Error &) {
            continue;
        }
        if (*b.params.d >= target_d) {
            return Theorem43Found{std::move(in), std::move(b), t};
        }
    }
    return std::nullopt;
}

}  // namespace eaqecc

#endif

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

#ifndef EAQECC_MIN_WEIGHT_HPP
#define EAQECC_MIN_WEIGHT_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "eaqecc/additive_code.hpp"
#include "eaqecc/gf2_matrix.hpp"

namespace eaqecc {

inline constexpr uint64_t kDefaultEnumerationCap = uint64_t{1} << 24;

/// Raised when an exhaustive enumeration would exceed the codeword budget.
class EnumerationCapExceeded : public std::runtime_error {
   public:
    EnumerationCapExceeded(size_t log2_required, uint64_t cap)
        : std::runtime_error("enumeration refused: needs 2^" + std::to_string(log2_required) +
                             " codewords, cap is " + std::to_string(cap) + " (raise --max-enum)"),
          log2_required_(log2_required),
          cap_(cap) {
    }
    size_t log2_required() const {
        return log2_required_;
    }
    uint64_t cap() const {
        return cap_;
    }

   private:
    size_t log2_required_;
    uint64_t cap_;
};

/// Raised when the set to minimize over is empty (C = exclude).
class EmptySearchSet : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
    uint64_t max_codewords = kDefaultEnumerationCap;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct WeightReport {
    size_t min_weight = 0;
    Gf4Vector witness;
    uint64_t enumerated = 0;
};

namespace internal {

struct Candidate {
    size_t weight = std::numeric_limits<size_t>::max();
    uint64_t index = 0;  // Gray-walk step of the witness
    bool operator<(const Candidate &o) const {
        return weight != o.weight ? weight < o.weight : index < o.index;
    }
};

inline uint64_t gray(uint64_t i) {
    return i ^ (i >> 1);
}

// Walks steps [lo, hi) of the Gray sequence over the message space. Codewords
// are stored as 2*half words (a block, then b block). HalfWords is the
// compile-time word count per half, or 0 for a runtime count.
template <size_t HalfWords>
Candidate scan_range(const std::vector<uint64_t> &gens, size_t half, uint64_t lo, uint64_t hi,
                     const Gf2Echelon *exclude) {
    const size_t h = HalfWords ? HalfWords : half;
    const size_t stride = 2 * h;
    std::vector<uint64_t> cur(stride, 0);
    std::vector<uint64_t> scratch(stride, 0);
    uint64_t g = gray(lo);
    for (size_t bit = 0; g; bit++, g >>= 1) {
        if (g & 1) {
            for (size_t k = 0; k < stride; k++) {
                cur[k] ^= gens[bit * stride + k];
            }
        }
    }
    Candidate best;
    for (uint64_t i = lo; i < hi; i++) {
        if (i != lo) {
            const uint64_t *src = gens.data() + std::countr_zero(i) * stride;
            for (size_t k = 0; k < stride; k++) {
                cur[k] ^= src[k];
            }
        }
        size_t w = 0;
        for (size_t k = 0; k < h; k++) {
            w += std::popcount(cur[k] | cur[h + k]);
        }
        if (w >= best.weight) {
            continue;
        }
        if (exclude) {
            std::copy(cur.begin(), cur.end(), scratch.begin());
            exclude->reduce(scratch);
            if (std::all_of(scratch.begin(), scratch.end(), [](uint64_t x) { return x == 0; })) {
                continue;
            }
        }
        best = {w, i};
    }
    return best;
}

inline Candidate scan_dispatch(const std::vector<uint64_t> &gens, size_t half, uint64_t lo, uint64_t hi,
                               const Gf2Echelon *exclude) {
    switch (half) {
        case 1:
            return scan_range<1>(gens, half, lo, hi, exclude);
        case 2:
            return scan_range<2>(gens, half, lo, hi, exclude);
        default:
            return scan_range<0>(gens, half, lo, hi, exclude);
    }
}

inline void check_search_set(const AdditiveCode &c, const AdditiveCode *exclude) {
    if (exclude) {
        if (exclude->length() != c.length()) {
            throw std::invalid_argument("min_weight: exclude set has a different length");
        }
        if (!c.contains(*exclude)) {
            throw std::invalid_argument("min_weight: exclude set is not a subcode of C");
        }
        if (exclude->m() == c.m()) {
            throw EmptySearchSet("min_weight: empty set (C equals the excluded subcode)");
        }
    } else if (c.m() == 0) {
        throw EmptySearchSet("min_weight: empty set (C has no nonzero codeword)");
    }
}

inline WeightReport min_weight_impl(const AdditiveCode &c, const AdditiveCode *exclude,
                                    const EnumerationOptions &opts) {
    const size_t n = c.length();
    const size_t m = c.m();
    const size_t half = words_for_bits(n);
    check_search_set(c, exclude);
    std::optional<Gf2Echelon> ech;
    if (exclude) {
        ech.emplace(2 * half);
        for (const auto &g : exclude->generators()) {
            ech->insert(phi_inv(g).words());
        }
    }
    if (m >= 63 || (uint64_t{1} << m) > opts.max_codewords) {
        throw EnumerationCapExceeded(m, opts.max_codewords);
    }

    std::vector<uint64_t> gens;
    gens.reserve(m * 2 * half);
    for (const auto &g : c.generators()) {
        auto v = phi_inv(g);
        gens.insert(gens.end(), v.words().begin(), v.words().end());
    }

    const uint64_t total = uint64_t{1} << m;
    unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    if (total < (uint64_t{1} << 16)) {
        workers = 1;
    }
    std::vector<Candidate> partial(workers);
    const Gf2Echelon *ex = ech ? &*ech : nullptr;
    if (workers == 1) {
        partial[0] = scan_dispatch(gens, half, 1, total, ex);
    } else {
        std::vector<std::jthread> pool;
        uint64_t chunk = (total - 1 + workers - 1) / workers;
        for (unsigned t = 0; t < workers; t++) {
            uint64_t lo = 1 + t * chunk;
            uint64_t hi = std::min(total, lo + chunk);
            if (lo >= hi) {
                continue;
            }
            pool.emplace_back([&, t, lo, hi] { partial[t] = scan_dispatch(gens, half, lo, hi, ex); });
        }
    }
    Candidate best = *std::min_element(partial.begin(), partial.end());

    SymplecticVector witness(n);
    uint64_t msg = gray(best.index);
    for (size_t bit = 0; bit < m; bit++) {
        if ((msg >> bit) & 1) {
            witness ^= phi_inv(c.generators()[bit]);
        }
    }
    return {best.weight, phi(witness), total - 1};
}

/// Visits the vectors of weight w in a fixed order: supports in
/// lexicographic order, symbols per support position in base 3.
template <typename F>
bool for_each_of_weight(size_t n, size_t w, F &&visit) {
    std::vector<size_t> pos(w);
    for (size_t i = 0; i < w; i++) {
        pos[i] = i;
    }
    uint64_t patterns = 1;
    for (size_t i = 0; i < w; i++) {
        patterns *= 3;
    }
    SymplecticVector v(n);
    while (true) {
        for (uint64_t p = 0; p < patterns; p++) {
            uint64_t q = p;
            for (size_t i = 0; i < w; i++) {
                uint64_t s = q % 3 + 1;  // 1 = (1|0), 2 = (0|1), 3 = (1|1)
                q /= 3;
                v.set_a(pos[i], s & 1);
                v.set_b(pos[i], s & 2);
            }
            if (visit(v)) {
                return true;
            }
        }
        for (size_t i = 0; i < w; i++) {
            v.set_a(pos[i], false);
            v.set_b(pos[i], false);
        }
        size_t i = w;
        while (i > 0 && pos[i - 1] == n - w + i - 1) {
            i--;
        }
        if (i == 0) {
            return false;
        }
        pos[i - 1]++;
        for (size_t j = i; j < w; j++) {
            pos[j] = pos[j - 1] + 1;
        }
    }
}

inline WeightReport min_weight_by_support_impl(const AdditiveCode &c, const AdditiveCode *exclude,
                                               const EnumerationOptions &opts) {
    const size_t n = c.length();
    const size_t words = 2 * words_for_bits(n);
    Gf2Echelon in_c(words);
    for (const auto &g : c.generators()) {
        in_c.insert(phi_inv(g).words());
    }
    std::optional<Gf2Echelon> in_ex;
    if (exclude) {
        in_ex.emplace(words);
        for (const auto &g : exclude->generators()) {
            in_ex->insert(phi_inv(g).words());
        }
    }
    uint64_t visited = 0;
    std::optional<SymplecticVector> found;
    for (size_t w = 1; w <= n && !found; w++) {
        for_each_of_weight(n, w, [&](const SymplecticVector &v) {
            if (++visited > opts.max_codewords) {
                throw EnumerationCapExceeded(c.m(), opts.max_codewords);
            }
            if (in_c.contains(v.words()) && !(in_ex && in_ex->contains(v.words()))) {
                found = v;
                return true;
            }
            return false;
        });
    }
    return {found->weight(), phi(*found), visited};
}

}  // namespace internal

/// Exact minimum symbol weight over C \ {0}.
inline WeightReport min_weight(const AdditiveCode &c, const EnumerationOptions &opts = {}) {
    return internal::min_weight_impl(c, nullptr, opts);
}

/// Exact minimum symbol weight over C \ exclude (exclude must be a subcode).
inline WeightReport min_weight(const AdditiveCode &c, const AdditiveCode &exclude,
                               const EnumerationOptions &opts = {}) {
    return internal::min_weight_impl(c, &exclude, opts);
}

/// Same minimum, found by testing all vectors of weight 1, 2, ... for
/// membership. Costs sum_{w <= d} C(n,w) 3^w tests instead of 2^m, so it
/// reaches large codes of small distance; the cap bounds the tests.
inline WeightReport min_weight_by_support(const AdditiveCode &c, const EnumerationOptions &opts = {}) {
    internal::check_search_set(c, nullptr);
    return internal::min_weight_by_support_impl(c, nullptr, opts);
}

inline WeightReport min_weight_by_support(const AdditiveCode &c, const AdditiveCode &exclude,
                                          const EnumerationOptions &opts = {}) {
    internal::check_search_set(c, &exclude);
    return internal::min_weight_by_support_impl(c, &exclude, opts);
}

/// Codeword enumeration when 2^m fits the cap, otherwise the weight-ordered scan.
inline WeightReport min_weight_auto(const AdditiveCode &c, const AdditiveCode *exclude,
                                    const EnumerationOptions &opts = {}) {
    if (c.m() < 63 && (uint64_t{1} << c.m()) <= opts.max_codewords) {
        return exclude ? min_weight(c, *exclude, opts) : min_weight(c, opts);
    }
    return exclude ? min_weight_by_support(c, *exclude, opts) : min_weight_by_support(c, opts);
}

}  // namespace eaqecc

#endif

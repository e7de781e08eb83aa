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

#ifndef EAQECC_PERFORMANCE_HPP
#define EAQECC_PERFORMANCE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eaqecc {

/// A code seen only through its block length and distance.
struct BlockCode {
    size_t n = 0;
    size_t d = 0;
};

inline constexpr size_t kMaxExactBlockLength = 120;

/// C(n, i) for i = 0..t, exactly. Fits in 128 bits for n <= 120.
inline std::vector<unsigned __int128> binomial_row(size_t n, size_t t) {
    if (n > kMaxExactBlockLength) {
        throw std::invalid_argument("block length " + std::to_string(n) + " exceeds the exact-binomial limit " +
                                    std::to_string(kMaxExactBlockLength));
    }
    std::vector<unsigned __int128> row{1};
    for (size_t i = 1; i <= t; i++) {
        row.push_back(row.back() * (n - i + 1) / i);
    }
    return row;
}

/// Probability that a depolarizing channel of rate p puts at most
/// t = floor((d-1)/2) errors on N qubits.
inline double p_correct(size_t n, size_t d, double p) {
    if (n < 1 || d < 1) {
        throw std::invalid_argument("p_correct: need N >= 1 and d >= 1");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("p_correct: p must lie in [0, 1]");
    }
    size_t t = std::min((d - 1) / 2, n);
    auto binom = binomial_row(n, t);
    double sum = 0.0;
    for (size_t i = 0; i <= t; i++) {
        sum += static_cast<double>(binom[i]) * std::pow(p, static_cast<double>(i)) *
               std::pow(1.0 - p, static_cast<double>(n - i));
    }
    return std::min(sum, 1.0);
}

inline double p_correct(const BlockCode &c, double p) {
    return p_correct(c.n, c.d, p);
}

/// P(D) = P(D^ea) P(D^b): the EA part sees rate p_a, the protector rate p_b.
inline double p_combination(const BlockCode &ea, const BlockCode &b, double p_a, double p_b) {
    return p_correct(ea, p_a) * p_correct(b, p_b);
}

/// Upper end of the p_b search interval.
enum class PbCeiling {
    TransmitRate,  // min(p_a, 1/2): the receiver's storage is the less noisy side
    Half,          // 1/2
};

struct ThresholdOptions {
    double tol = 1e-8;
    PbCeiling ceiling = PbCeiling::TransmitRate;
};

struct Threshold {
    double p_b = 0.0;
    // The combination still wins at the top of the interval, so p_b is the
    // ceiling itself rather than a crossing point.
    bool at_cap = false;
    double ceiling = 0.0;
};

inline double pb_ceiling(double p_a, PbCeiling c) {
    return c == PbCeiling::Half ? 0.5 : std::min(p_a, 0.5);
}

/// Largest p_b in [0, ceiling] with P(D) >= P(C), by bisection.
inline std::optional<Threshold> max_pb(const BlockCode &ea, const BlockCode &b, const BlockCode &ref, double p_a,
                                       const ThresholdOptions &opts = {}) {
    if (!(opts.tol > 0.0)) {
        throw std::invalid_argument("max_pb: tol must be positive");
    }
    double target = p_correct(ref, p_a);
    double pea = p_correct(ea, p_a);
    auto wins = [&](double pb) { return pea * p_correct(b, pb) >= target; };
    double hi = pb_ceiling(p_a, opts.ceiling);
    if (!wins(0.0)) {
        return std::nullopt;
    }
    if (wins(hi)) {
        return Threshold{hi, true, hi};
    }
    double lo = 0.0;
    while (hi - lo > opts.tol) {
        double mid = lo + (hi - lo) / 2;
        if (wins(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return Threshold{lo, false, pb_ceiling(p_a, opts.ceiling)};
}

struct ComparisonRow {
    double p_a = 0.0;
    std::optional<double> max_p_b;
    std::optional<double> ratio;  // max_p_b / p_a
    std::optional<double> p_d;    // P(D) at max_p_b
    double p_c = 0.0;
    bool at_cap = false;
};

inline std::vector<ComparisonRow> comparison_table(const BlockCode &ea, const BlockCode &b, const BlockCode &ref,
                                                   const std::vector<double> &grid,
                                                   const ThresholdOptions &opts = {}) {
    if (grid.empty()) {
        throw std::invalid_argument("comparison_table: empty p_a grid");
    }
    std::vector<ComparisonRow> rows;
    for (double p_a : grid) {
        ComparisonRow r;
        r.p_a = p_a;
        r.p_c = p_correct(ref, p_a);
        if (auto th = max_pb(ea, b, ref, p_a, opts)) {
            r.max_p_b = th->p_b;
            r.ratio = th->p_b / p_a;
            r.p_d = p_combination(ea, b, p_a, th->p_b);
            r.at_cap = th->at_cap;
        }
        rows.push_back(r);
    }
    return rows;
}

/// The printed abscissae: 100 evenly spaced points from 0.01 to 0.99, first `count` of them.
inline std::vector<double> table_grid(size_t count) {
    std::vector<double> g;
    for (size_t j = 0; j < count; j++) {
        g.push_back(0.01 + static_cast<double>(j) * (0.98 / 99.0));
    }
    return g;
}

struct TableConfig {
    int id = 0;
    std::string ea_label;
    std::string protector_label;
    std::string ref_label;
    BlockCode ea;
    BlockCode b;
    BlockCode ref;
    size_t rows = 0;
};

inline TableConfig table_config(int id) {
    switch (id) {
        case 1:
            return {1, "[[12,1,7;1]]", "[[5,1,3]]", "[[17,1,7]]", {12, 7}, {5, 3}, {17, 7}, 16};
        case 2:
            return {2, "[[12,4,7;8]]", "[[14,8,3]]", "[[25,4,7]]", {12, 7}, {14, 3}, {25, 7}, 11};
        case 3:
            return {3, "[[13,3,9;10]]", "[[16,10,3]]", "[[27,3,9]]", {13, 9}, {16, 3}, {27, 9}, 15};
        default:
            throw std::invalid_argument("unknown table " + std::to_string(id) + " (expected 1, 2 or 3)");
    }
}

inline std::vector<ComparisonRow> reproduce_table(int id, const ThresholdOptions &opts = {}) {
    auto cfg = table_config(id);
    return comparison_table(cfg.ea, cfg.b, cfg.ref, table_grid(cfg.rows), opts);
}

namespace internal {

inline std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
    return buf;
}

}  // namespace internal

inline constexpr const char *kComparisonCsvHeader = "p_a,max_p_b,ratio,P_D,P_C";

/// One CSV line with 4,4,4,6,6 decimals; rows without a threshold leave the
/// first three value columns empty.
inline std::string csv_line(const ComparisonRow &r) {
    std::string s = internal::fixed(r.p_a, 4) + ",";
    s += (r.max_p_b ? internal::fixed(*r.max_p_b, 4) : "") + ",";
    s += (r.ratio ? internal::fixed(*r.ratio, 4) : "") + ",";
    s += (r.p_d ? internal::fixed(*r.p_d, 6) : "") + ",";
    s += internal::fixed(r.p_c, 6);
    return s;
}

}  // namespace eaqecc

#endif

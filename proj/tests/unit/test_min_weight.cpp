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

#include <gtest/gtest.h>

#include <random>

#include "eaqecc.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace eaqecc;

TEST(min_weight, dodecacode_full_enumeration) {
    auto d = fixtures::code("dodecacode");
    auto r = min_weight(d);
    EXPECT_EQ(r.min_weight, 6u);
    EXPECT_EQ(r.enumerated, 4095u);
    EXPECT_EQ(r.witness.weight(), 6u);
    EXPECT_TRUE(d.contains(r.witness));
    EXPECT_EQ(oracle::min_weight(d), 6);
}

TEST(min_weight, combination_fixture_avoiding_radical) {
    auto b = theorem43_build(fixtures::t43("t43_dodecacode_E_2_4_1"), false);
    auto rad = trace_radical(b.m);
    auto r = min_weight(b.m, rad);
    EXPECT_EQ(r.min_weight, 7u);
    EXPECT_TRUE(b.m.contains(r.witness));
    EXPECT_FALSE(rad.contains(r.witness));
    EXPECT_EQ(oracle::min_weight(b.m, &rad), 7);
}

TEST(min_weight, empty_search_sets) {
    auto d = fixtures::code("dodecacode");
    EXPECT_THROW(min_weight(d, d), EmptySearchSet);
    EXPECT_THROW(min_weight(AdditiveCode(3)), EmptySearchSet);
}

TEST(min_weight, exclude_must_be_a_subcode) {
    auto c = AdditiveCode::from_strings(2, {"w0"});
    EXPECT_THROW(min_weight(c, AdditiveCode::from_strings(2, {"0w"})), std::invalid_argument);
    EXPECT_THROW(min_weight(c, AdditiveCode::from_strings(3, {"w00"})), std::invalid_argument);
}

TEST(min_weight, cap_refusal_names_the_budget) {
    EnumerationOptions o;
    o.max_codewords = 1000;
    try {
        min_weight(fixtures::code("dodecacode"), o);
        FAIL();
    } catch (const EnumerationCapExceeded &e) {
        EXPECT_EQ(e.log2_required(), 12u);
        EXPECT_EQ(e.cap(), 1000u);
        EXPECT_NE(std::string(e.what()).find("2^12"), std::string::npos);
    }
}

TEST(min_weight, witness_independent_of_worker_count) {
    auto c = fixtures::code("self_dual_18");
    EnumerationOptions one, four;
    one.threads = 1;
    four.threads = 4;
    auto a = min_weight(c, one);
    auto b = min_weight(c, four);
    EXPECT_EQ(a.min_weight, 8u);
    EXPECT_EQ(a.min_weight, b.min_weight);
    EXPECT_EQ(a.witness, b.witness);
}

TEST(min_weight, support_scan_agrees_with_enumeration) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; t++) {
        size_t n = 2 + rng() % 7;
        auto c = oracle::random_code(n, 1 + rng() % std::min<size_t>(2 * n, 10), rng);
        auto a = min_weight(c);
        auto b = min_weight_by_support(c);
        EXPECT_EQ(a.min_weight, b.min_weight);
        EXPECT_TRUE(c.contains(b.witness));
        auto rad = trace_radical(c);
        if (rad.m() < c.m()) {
            EXPECT_EQ(min_weight(c, rad).min_weight, min_weight_by_support(c, rad).min_weight);
        }
    }
}

TEST(min_weight, support_scan_reaches_beyond_the_cap) {
    // N(S) of the [[16,10,3]] stabilizer has 2^26 words.
    auto s = fixtures::code("stab_16_10_3");
    auto n = trace_dual(s);
    EXPECT_THROW(min_weight(n, s), EnumerationCapExceeded);
    auto r = min_weight_by_support(n, s);
    EXPECT_EQ(r.min_weight, 3u);
    EXPECT_TRUE(n.contains(r.witness));
    EXPECT_FALSE(s.contains(r.witness));
    EnumerationOptions tiny;
    tiny.max_codewords = 10;
    EXPECT_THROW(min_weight_by_support(n, s, tiny), EnumerationCapExceeded);
}

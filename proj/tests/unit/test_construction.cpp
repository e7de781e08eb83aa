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

#include <algorithm>

#include "eaqecc.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace eaqecc;

namespace {

struct FixtureCase {
    const char *name;
    const char *params;
    size_t d1;
    size_t d2;
};

const std::vector<FixtureCase> kFixtures = {
    {"t43_dodecacode_E_2_4_1", "[[14,2,7;4]]", 6, 1},   {"t43_dodecacode_E_3_4_2", "[[15,2,8;5]]", 6, 2},
    {"t43_self_dual_14_E_2_4_1", "[[16,2,7;4]]", 6, 1}, {"t43_self_dual_14_E_3_4_2", "[[17,2,8;5]]", 6, 2},
    {"t43_self_dual_18_E_2_4_1", "[[20,2,9;4]]", 8, 1}, {"t43_self_dual_18_E_3_4_2", "[[21,2,10;5]]", 8, 2},
};

Theorem43Input tiny_input() {
    return {AdditiveCode::from_strings(3, {"w00"}), AdditiveCode::from_strings(3, {"0w0", "00w"}),
            AdditiveCode::from_strings(1, {"w", "W"})};
}

std::string expect_kind(const Theorem43Input &in) {
    try {
        theorem43_build(in, false);
    } catch (const Theorem43Error &e) {
        return e.kind();
    }
    return "";
}

std::string catalog_error(const std::string &text) {
    try {
        parse_catalog(text, "cat.json");
    } catch (const FormatError &e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(theorem43_build, frozen_fixtures) {
    for (const auto &f : kFixtures) {
        auto in = fixtures::t43(f.name);
        auto b = theorem43_build(in, true);
        EXPECT_EQ(b.params.str(), f.params) << f.name;
        EXPECT_EQ(b.d1, f.d1) << f.name;
        EXPECT_EQ(b.d2, f.d2) << f.name;
        EXPECT_EQ(*b.params.d, f.d1 + f.d2) << f.name;
        EXPECT_TRUE(b.bound_ok.value_or(false)) << f.name;
        EXPECT_EQ(b.c_sgs, b.params.c) << f.name;
        EXPECT_EQ(b.m.m(), b.params.l + 2 * b.params.k) << f.name;

        auto rad = trace_radical(b.m);
        Gf4Vector pad(in.e.length());
        for (const auto &g : in.c.generators()) {
            EXPECT_TRUE(rad.contains(concat(g, pad))) << f.name;
        }
        EXPECT_EQ(rad.m(), b.params.l) << f.name;
    }
}

TEST(theorem43_build, smallest_fixture_against_oracle) {
    auto b = theorem43_build(fixtures::t43("t43_dodecacode_E_2_4_1"), true);
    auto rad = trace_radical(b.m);
    EXPECT_EQ(oracle::min_weight(b.m, &rad), 7);
    auto s = trace_dual(b.m);
    EXPECT_EQ(eaqecc_params(s, true), b.params);
}

TEST(theorem43_build, tiny_example) {
    auto b = theorem43_build(tiny_input(), true);
    EXPECT_EQ(b.params.n, 4u);
    EXPECT_EQ(b.params.k, 1u);
    EXPECT_EQ(b.params.l, 1u);
    EXPECT_EQ(b.params.c, 2u);
    EXPECT_EQ(b.c_sgs, 2u);
    EXPECT_TRUE(*b.bound_ok);
}

TEST(theorem43_build, precondition_errors) {
    auto in = tiny_input();
    in.cprime = AdditiveCode::from_strings(2, {"0w", "01"});
    EXPECT_EQ(expect_kind(in), "length mismatch");

    in = tiny_input();
    in.cprime = AdditiveCode::from_strings(3, {"0w0"});
    EXPECT_EQ(expect_kind(in), "row count mismatch");

    in = tiny_input();
    in.cprime = AdditiveCode::from_strings(3, {"w00", "00w"});
    EXPECT_EQ(expect_kind(in), "dependent rows");

    in = tiny_input();
    in.cprime = AdditiveCode::from_strings(3, {"W00", "00w"});
    EXPECT_EQ(expect_kind(in), "chain violation");

    in = tiny_input();
    in.cprime = AdditiveCode::from_strings(3, {"0w0", "0W0"});
    EXPECT_EQ(expect_kind(in), "ACD violation");
}

TEST(search_theorem43, reproduces_frozen_fixture) {
    auto d = fixtures::code("dodecacode");
    auto e = fixtures::code("E_2_4_1");
    auto a = search_theorem43(d, 8, e, 7, 100, 1);
    auto b = search_theorem43(d, 8, e, 7, 100, 1);
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->trial, b->trial);
    EXPECT_EQ(oracle::strings(a->build.m), oracle::strings(b->build.m));

    auto frozen = fixtures::t43("t43_dodecacode_E_2_4_1");
    EXPECT_EQ(a->trial, 0u);
    EXPECT_EQ(oracle::strings(a->input.c), oracle::strings(frozen.c));
    EXPECT_EQ(oracle::strings(a->input.cprime), oracle::strings(frozen.cprime));
    EXPECT_EQ(oracle::strings(a->input.e), oracle::strings(frozen.e));
}

TEST(search_theorem43, budget_and_unreachable_target) {
    auto d = fixtures::code("dodecacode");
    auto e = fixtures::code("E_2_4_1");
    EXPECT_FALSE(search_theorem43(d, 8, e, 7, 0, 1));
    EXPECT_FALSE(search_theorem43(d, 8, e, 8, 50, 1));
}

TEST(search_theorem43, argument_errors) {
    auto d = fixtures::code("dodecacode");
    auto e = fixtures::code("E_2_4_1");
    EXPECT_THROW(search_theorem43(d, 6, e, 7, 1, 1), std::invalid_argument);
    EXPECT_THROW(search_theorem43(e, 0, e, 1, 1, 1), std::invalid_argument);
    auto degenerate = AdditiveCode::from_strings(3, {"w00", "0w0", "00w", "W00"});
    EXPECT_THROW(search_theorem43(d, 8, degenerate, 7, 1, 1), std::invalid_argument);
}

TEST(catalog, shipped_catalog_loads) {
    auto cat = fixtures::catalog();
    EXPECT_EQ(cat.entries().size(), 38u);
    auto *d = cat.find("dodecacode");
    ASSERT_TRUE(d && d->code);
    EXPECT_EQ(d->size_log2, 12u);
    EXPECT_EQ(d->d, 6u);
    auto *p = cat.find("self_dual_30");
    ASSERT_TRUE(p);
    EXPECT_EQ(p->kind, EntryKind::CodeParams);
    EXPECT_FALSE(p->code);
    auto *q = cat.find("qecc_10_4_3");
    ASSERT_TRUE(q);
    EXPECT_EQ(q->stabilizer, "stab_10_4_3");
    EXPECT_EQ(cat.find("nope"), nullptr);
}

TEST(catalog, diagnostics) {
    EXPECT_NE(catalog_error("[\n"
                            "  {\"name\": \"a\", \"length\": 1, \"generators\": [\"w\"]},\n"
                            "  {\"name\": \"a\", \"length\": 1, \"generators\": [\"W\"]}\n"
                            "]")
                  .find("cat.json:3: duplicate catalog entry 'a'"),
              std::string::npos);
    EXPECT_NE(catalog_error("[\n"
                            "  {\"name\": \"a\", \"length\": 1, \"generators\": [\"w\"]},\n"
                            "\n"
                            "  {\"name\": \"b\", \"length\": 2, \"generators\": [\"w\"]}\n"
                            "]")
                  .find("cat.json:4:"),
              std::string::npos);
    EXPECT_NE(catalog_error("[{\"name\": \"a\", \"length\": 2, \"generators\": [\"w0\"], "
                            "\"claimed\": {\"size_log2\": 2}}]")
                  .find("claimed size 2^2 but generators span 2^1"),
              std::string::npos);
    EXPECT_NE(catalog_error("[{\"name\": \"q\", \"kind\": \"qecc_params\", \"n\": 5, \"k\": 1, \"d\": 3, "
                            "\"stabilizer\": \"five\"}]")
                  .find("names missing stabilizer 'five'"),
              std::string::npos);
    EXPECT_NE(catalog_error("[{\"name\": \"x\", \"kind\": \"mystery\"}]").find("unknown kind 'mystery'"),
              std::string::npos);
    EXPECT_NE(catalog_error("{}").find("must be a JSON array"), std::string::npos);
}

TEST(catalog, stabilizer_shape_is_checked) {
    EXPECT_NE(catalog_error("[{\"name\": \"s\", \"length\": 2, \"generators\": [\"w0\"]},\n"
                            " {\"name\": \"q\", \"kind\": \"qecc_params\", \"n\": 2, \"k\": 0, \"d\": 1, "
                            "\"stabilizer\": \"s\"}]")
                  .find("wrong shape"),
              std::string::npos);
}

TEST(lookup_protector, catalog_and_bound) {
    auto cat = fixtures::catalog();
    struct Case {
        size_t c;
        const char *params;
    };
    for (auto [c, params] : std::vector<Case>{{1, "[[5,1,3]]"},
                                              {2, "[[8,2,3]]"},
                                              {3, "[[8,3,3]]"},
                                              {4, "[[10,4,3]]"},
                                              {8, "[[14,8,3]]"},
                                              {10, "[[16,10,3]]"}}) {
        auto p = lookup_protector(cat, c);
        EXPECT_EQ(p.params.str(), params) << "c=" << c;
        EXPECT_FALSE(p.from_bound);
    }
    auto b = lookup_protector(cat, 11);
    EXPECT_TRUE(b.from_bound);
    EXPECT_EQ(b.source, "bound");
    EXPECT_EQ(b.params.str(), "[[17,11,3]]");
}

TEST(corollary44_suite, statuses_with_verification) {
    SuiteOptions opts;
    opts.verify_distance = true;
    auto rows = corollary44_suite(fixtures::catalog(), opts);
    ASSERT_EQ(rows.size(), 9u + 15u);
    const std::vector<std::pair<std::string, size_t>> verified = {
        {"[[14,2,7;4]]+[[10,4,3]]", 7}, {"[[15,2,8;5]]+[[12,6,3]]", 8}, {"[[16,2,7;4]]+[[10,4,3]]", 7},
        {"[[17,2,8;5]]+[[12,6,3]]", 8}, {"[[20,2,9;4]]+[[10,4,3]]", 9}, {"[[21,2,9;5]]+[[12,6,3]]", 10},
    };
    for (size_t i = 0; i < verified.size(); i++) {
        EXPECT_EQ(rows[i].label, verified[i].first);
        EXPECT_EQ(rows[i].status, SuiteStatus::Verified) << rows[i].label;
        EXPECT_EQ(rows[i].computed_d, verified[i].second) << rows[i].label;
        EXPECT_EQ(rows[i].c_sgs, rows[i].derived_c);
        EXPECT_TRUE(rows[i].protector_verified.value_or(false));
    }
    auto &r21 = rows[5].notes;
    EXPECT_NE(std::find(r21.begin(), r21.end(), "computed d = 10, listed d = 9"), r21.end());
    for (size_t i = 6; i < 9; i++) {
        EXPECT_EQ(rows[i].status, SuiteStatus::ParametersOnly) << rows[i].label;
        EXPECT_FALSE(rows[i].computed_d);
    }
    for (size_t i = 9; i < rows.size(); i++) {
        EXPECT_EQ(rows[i].group, "ea-family");
        EXPECT_EQ(rows[i].status, SuiteStatus::ParametersOnly) << rows[i].label;
        EXPECT_TRUE(rows[i].protector_verified.value_or(false)) << rows[i].label;
    }
    EXPECT_EQ(to_string(SuiteStatus::ParametersOnly), "parameters-only");
}

TEST(corollary44_suite, without_verification_everything_is_parameters_only) {
    auto rows = corollary44_suite(fixtures::catalog());
    for (const auto &r : rows) {
        EXPECT_EQ(r.status, SuiteStatus::ParametersOnly) << r.label;
        EXPECT_FALSE(r.protector_verified);
    }
}

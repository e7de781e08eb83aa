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

#ifndef EAQECC_CLI_HPP
#define EAQECC_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eaqecc.hpp"

#ifndef EAQECC_DATA_DIR
#define EAQECC_DATA_DIR "data"
#endif

namespace eaqecc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapExceeded = 3;

struct Config {
    std::string format = "json";
    uint64_t max_enum = kDefaultEnumerationCap;
    double tol = 1e-8;
    uint64_t seed = 1;
    std::string catalog = std::string(EAQECC_DATA_DIR) + "/catalog.json";
    std::string pb_ceiling = "transmit";

    EnumerationOptions enumeration() const {
        EnumerationOptions o;
        o.max_codewords = max_enum;
        return o;
    }
    ThresholdOptions threshold() const {
        ThresholdOptions o;
        o.tol = tol;
        o.ceiling = pb_ceiling == "half" ? PbCeiling::Half : PbCeiling::TransmitRate;
        return o;
    }
};

namespace internal {

inline std::string csv_field(const Json &v) {
    std::string s;
    if (v.is_string()) {
        s = v.get<std::string>();
    } else if (v.is_null()) {
        return "";
    } else if (v.is_array()) {
        for (size_t i = 0; i < v.size(); i++) {
            s += (i ? ";" : "") + csv_field(v[i]);
        }
    } else {
        s = v.dump();
    }
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char c : s) {
            q += c == '"' ? "\"\"" : std::string(1, c);
        }
        return q + "\"";
    }
    return s;
}

inline void flatten(const Json &v, const std::string &prefix, Json &out) {
    if (v.is_object()) {
        for (const auto &[k, x] : v.items()) {
            flatten(x, prefix.empty() ? k : prefix + "." + k, out);
        }
    } else {
        out[prefix.empty() ? "value" : prefix] = v;
    }
}

/// An object becomes one header line and one row; an array of objects
/// becomes a header (union of keys, first-seen order) and one row each.
inline std::string to_csv(const Json &doc) {
    std::vector<Json> rows;
    if (doc.is_array()) {
        for (const auto &x : doc) {
            Json f = Json::object();
            flatten(x, "", f);
            rows.push_back(f);
        }
    } else {
        Json f = Json::object();
        flatten(doc, "", f);
        rows.push_back(f);
    }
    std::vector<std::string> keys;
    for (const auto &r : rows) {
        for (const auto &[k, x] : r.items()) {
            if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
                keys.push_back(k);
            }
        }
    }
    std::string s;
    for (size_t i = 0; i < keys.size(); i++) {
        s += (i ? "," : "") + keys[i];
    }
    s += "\n";
    for (const auto &r : rows) {
        for (size_t i = 0; i < keys.size(); i++) {
            s += (i ? "," : "") + (r.contains(keys[i]) ? csv_field(r[keys[i]]) : std::string());
        }
        s += "\n";
    }
    return s;
}

inline Json generators_json(const AdditiveCode &c) {
    Json a = Json::array();
    for (const auto &g : c.generators()) {
        a.push_back(g.str());
    }
    return a;
}

inline Json code_json(const AdditiveCode &c) {
    Json j;
    j["length"] = c.length();
    j["size_log2"] = c.m();
    j["generators"] = generators_json(c);
    return j;
}

inline BlockCode block(const std::string &text) {
    auto v = parse_param_tuple(text);
    if (v.size() < 2 || v.size() > 4) {
        throw std::invalid_argument("expected n,d (or a full parameter tuple), got '" + text + "'");
    }
    // n,d / n,k,d / n,k,d,c
    return {v[0], v.size() == 2 ? v[1] : v[2]};
}

inline Json row_json(const ComparisonRow &r) {
    Json j;
    j["p_a"] = r.p_a;
    j["max_p_b"] = r.max_p_b ? Json(*r.max_p_b) : Json(nullptr);
    j["ratio"] = r.ratio ? Json(*r.ratio) : Json(nullptr);
    j["P_D"] = r.p_d ? Json(*r.p_d) : Json(nullptr);
    j["P_C"] = r.p_c;
    j["at_cap"] = r.at_cap;
    return j;
}

inline Json build_json(const Theorem43Build &b) {
    Json j;
    j["params"] = to_json(b.params);
    j["d1"] = b.d1 ? Json(*b.d1) : Json(nullptr);
    j["d2"] = b.d2 ? Json(*b.d2) : Json(nullptr);
    j["bound_ok"] = b.bound_ok ? Json(*b.bound_ok) : Json(nullptr);
    j["c_sgs"] = b.c_sgs;
    j["M"] = code_json(b.m);
    return j;
}

inline Json suite_row_json(const SuiteRow &r) {
    Json j;
    j["group"] = r.group;
    j["params"] = r.label;
    j["status"] = to_string(r.status);
    j["match"] = to_json(r.match);
    if (r.group == "combination") {
        j["D"] = r.d_code;
        j["E"] = r.e_code;
        j["bound_d"] = r.bound_d ? Json(*r.bound_d) : Json(nullptr);
        j["derived_c"] = r.derived_c ? Json(*r.derived_c) : Json(nullptr);
        j["computed_d"] = r.computed_d ? Json(*r.computed_d) : Json(nullptr);
        j["c_sgs"] = r.c_sgs ? Json(*r.c_sgs) : Json(nullptr);
        j["bound_ok"] = r.bound_ok ? Json(*r.bound_ok) : Json(nullptr);
        j["trial"] = r.trial ? Json(*r.trial) : Json(nullptr);
    }
    j["protector"] = r.protector_source;
    j["protector_verified"] = r.protector_verified ? Json(*r.protector_verified) : Json(nullptr);
    j["notes"] = r.notes;
    return j;
}

}  // namespace internal

/// Runs one invocation; args exclude the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Config cfg;
    CLI::App app{"Entanglement-assisted stabilizer codes with noisy ebits: algebra, constructions, performance"};
    app.name("eaqecc");
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--max-enum", cfg.max_enum, "Codeword enumeration cap")->check(CLI::PositiveNumber);
    app.add_option("--tol", cfg.tol, "Bisection tolerance on p_b")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Search seed");
    app.add_option("--catalog", cfg.catalog, "Catalog file");
    app.add_option("--pb-ceiling", cfg.pb_ceiling, "Top of the p_b search interval: transmit = min(p_a,1/2), half = 1/2")
        ->check(CLI::IsMember({"transmit", "half"}));

    std::string file1, file2, file3, exclude_file, text1, text2;
    size_t number = 0, number2 = 0;
    bool flag = false;
    uint64_t budget = 10000;
    std::string ea_text, b_text, ref_text;
    double p_a = 0;
    std::vector<double> pa_list;
    int table_id = 0;

    auto *dual = app.add_subcommand("dual", "Trace dual (and Hermitian dual of a linear code)");
    dual->add_option("codefile", file1)->required()->check(CLI::ExistingFile);

    auto *decompose = app.add_subcommand("decompose", "Split C into its radical and an ACD complement");
    decompose->add_option("codefile", file1)->required()->check(CLI::ExistingFile);

    auto *distance = app.add_subcommand("distance", "Minimum weight of C, or of C minus a subcode");
    distance->add_option("codefile", file1)->required()->check(CLI::ExistingFile);
    distance->add_option("--exclude", exclude_file, "Subcode to leave out")->check(CLI::ExistingFile);

    auto *params = app.add_subcommand("params", "[[n,k,d]] of a stabilizer, or [[n,k,d;c]] with --ea");
    params->add_option("codefile", file1)->required()->check(CLI::ExistingFile);
    params->add_flag("--ea", flag, "Treat the code as an EA-stabilizer");

    auto *match = app.add_subcommand("match", "Check an EAQECC against a protector QECC");
    match->add_option("ea", text1, "n,k,d,c")->required();
    match->add_option("qecc", text2, "m,k_b,d_b")->required();

    auto *bound = app.add_subcommand("bound", "Guaranteed protector length for c ebits");
    bound->add_option("c", number)->required();

    auto *build = app.add_subcommand("build-t43", "Assemble [G|0 ; G'|E] and derive its parameters");
    build->add_option("C", file1)->required()->check(CLI::ExistingFile);
    build->add_option("Cprime", file2)->required()->check(CLI::ExistingFile);
    build->add_option("E", file3)->required()->check(CLI::ExistingFile);
    build->add_flag("--verify", flag, "Compute distances");

    auto *search = app.add_subcommand("search-t43", "Seeded search for a splitting of D reaching target_d");
    search->add_option("D", file1)->required()->check(CLI::ExistingFile);
    search->add_option("split_l", number)->required();
    search->add_option("E", file3)->required()->check(CLI::ExistingFile);
    search->add_option("target_d", number2)->required();
    search->add_option("--budget", budget, "Number of trials");

    auto *suite = app.add_subcommand("suite", "Reproduction suites");
    suite->add_option("name", text1)->required()->check(CLI::IsMember({"cor44"}));
    suite->add_flag("--verify", flag, "Verify distances where generator data allows");
    suite->add_option("--budget", budget, "Search trials per row");

    auto *compare = app.add_subcommand("compare", "Threshold p_b at which the combination matches a reference code");
    compare->add_option("--ea", ea_text, "n,d of the EA code")->required();
    compare->add_option("--b", b_text, "m,d_b of the protector")->required();
    compare->add_option("--ref", ref_text, "N,d_ref of the reference code")->required();
    compare->add_option("--pa", p_a, "Channel rate p_a")->required()->check(CLI::Range(0.0, 1.0));

    auto *table = app.add_subcommand("table", "Performance tables");
    table->add_option("id", table_id, "1, 2 or 3")->check(CLI::IsMember({1, 2, 3}));
    auto *custom = table->add_flag("--custom", flag, "Use --ea/--b/--ref and --pa values instead of a stored table");
    table->add_option("--ea", ea_text, "n,d of the EA code");
    table->add_option("--b", b_text, "m,d_b of the protector");
    table->add_option("--ref", ref_text, "N,d_ref of the reference code");
    table->add_option("--pa", pa_list, "Channel rates")->check(CLI::Range(0.0, 1.0));
    table->add_option("--rows", number, "Use the first N points of the standard grid");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
        if (table->parsed()) {
            bool has_custom = custom->count() > 0;
            if (has_custom == (table_id != 0)) {
                throw CLI::ValidationError("table", "give exactly one of a table id or --custom");
            }
            if (has_custom && (ea_text.empty() || b_text.empty() || ref_text.empty())) {
                throw CLI::ValidationError("table", "--custom needs --ea, --b and --ref");
            }
            if (has_custom && pa_list.empty() && number == 0) {
                throw CLI::ValidationError("table", "--custom needs --pa values or --rows");
            }
        }
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    const bool csv = cfg.format == "csv";
    auto emit = [&](const Json &doc) {
        if (csv) {
            out << internal::to_csv(doc);
        } else {
            out << doc.dump() << "\n";
        }
    };

    try {
        auto opts = cfg.enumeration();
        if (dual->parsed()) {
            auto rec = load_code_file(file1);
            Json j;
            j["name"] = rec.name;
            j["trace_dual"] = internal::code_json(trace_dual(rec.additive()));
            if (rec.kind == CodeKind::Linear) {
                auto h = hermitian_dual(rec.linear());
                Json hj;
                hj["length"] = h.length();
                hj["dimension"] = h.k();
                Json rows = Json::array();
                for (const auto &b : h.basis()) {
                    rows.push_back(b.str());
                }
                hj["basis"] = rows;
                j["hermitian_dual"] = hj;
            }
            emit(j);
        } else if (decompose->parsed()) {
            auto c = load_code_file(file1).additive();
            auto dec = decompose_additive(c);
            auto cls = classify(c);
            Json j;
            j["length"] = c.length();
            j["size_log2"] = c.m();
            j["l"] = dec.radical.m();
            j["c"] = dec.ace.m() / 2;
            j["trace_self_orthogonal"] = cls.trace_self_orthogonal;
            j["acd"] = cls.acd;
            j["dual_containing"] = cls.dual_containing;
            j["radical"] = internal::generators_json(dec.radical);
            j["ace"] = internal::generators_json(dec.ace);
            emit(j);
        } else if (distance->parsed()) {
            auto c = load_code_file(file1).additive();
            WeightReport r;
            if (exclude_file.empty()) {
                r = min_weight(c, opts);
            } else {
                r = min_weight(c, load_code_file(exclude_file).additive(), opts);
            }
            Json j;
            j["min_weight"] = r.min_weight;
            j["witness"] = r.witness.str();
            j["enumerated"] = r.enumerated;
            emit(j);
        } else if (params->parsed()) {
            auto c = load_code_file(file1).additive();
            emit(flag ? to_json(eaqecc_params(c, true, opts)) : to_json(qecc_params(c, true, opts)));
        } else if (match->parsed()) {
            auto ea = parse_eaqecc_params(text1);
            auto b = parse_qecc_params(text2);
            Json j = to_json(match_check(ea, b));
            j["params"] = CombinationParams{ea, b}.str();
            emit(j);
        } else if (bound->parsed()) {
            auto b = protector_bound(number);
            Json j;
            j["s"] = b.s;
            j["m"] = b.m;
            emit(j);
        } else if (build->parsed()) {
            Theorem43Input in{load_code_file(file1).additive(), load_code_file(file2).additive(),
                              load_code_file(file3).additive()};
            emit(internal::build_json(theorem43_build(in, flag, opts)));
        } else if (search->parsed()) {
            auto d = load_code_file(file1).additive();
            auto e = load_code_file(file3).additive();
            auto found = search_theorem43(d, number, e, number2, budget, cfg.seed, opts);
            Json j;
            j["found"] = found.has_value();
            j["seed"] = cfg.seed;
            j["budget"] = budget;
            j["target_d"] = number2;
            if (found) {
                j["trial"] = found->trial;
                j["C"] = internal::generators_json(found->input.c);
                j["Cprime"] = internal::generators_json(found->input.cprime);
                j["E"] = internal::generators_json(found->input.e);
                j["build"] = internal::build_json(found->build);
            }
            emit(j);
        } else if (suite->parsed()) {
            auto cat = load_catalog(cfg.catalog);
            SuiteOptions so;
            so.verify_distance = flag;
            so.enumeration = opts;
            so.budget = budget;
            so.seed = cfg.seed;
            Json rows = Json::array();
            for (const auto &r : corollary44_suite(cat, so)) {
                rows.push_back(internal::suite_row_json(r));
            }
            emit(rows);
        } else if (compare->parsed()) {
            auto rows = comparison_table(internal::block(ea_text), internal::block(b_text),
                                         internal::block(ref_text), {p_a}, cfg.threshold());
            if (csv) {
                out << kComparisonCsvHeader << "\n" << csv_line(rows[0]) << "\n";
            } else {
                emit(internal::row_json(rows[0]));
            }
        } else if (table->parsed()) {
            std::vector<ComparisonRow> rows;
            if (table_id) {
                rows = reproduce_table(table_id, cfg.threshold());
            } else {
                auto grid = pa_list.empty() ? table_grid(number) : pa_list;
                rows = comparison_table(internal::block(ea_text), internal::block(b_text), internal::block(ref_text),
                                        grid, cfg.threshold());
            }
            if (csv) {
                out << kComparisonCsvHeader << "\n";
                for (const auto &r : rows) {
                    out << csv_line(r) << "\n";
                }
            } else {
                Json a = Json::array();
                for (const auto &r : rows) {
                    a.push_back(internal::row_json(r));
                }
                emit(a);
            }
        }
    } catch (const EnumerationCapExceeded &e) {
        err << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitOk;
}

}  // namespace eaqecc::cli

#endif

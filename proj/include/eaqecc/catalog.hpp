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

#ifndef EAQECC_CATALOG_HPP
#define EAQECC_CATALOG_HPP

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "eaqecc/ea_params.hpp"
#include "eaqecc/io.hpp"
#include "eaqecc/theorem43.hpp"

namespace eaqecc {

enum class EntryKind {
    Code,          // full generator data
    QeccParams,    // [[n,k,d]], optionally realized by a code entry
    EaqeccParams,  // [[n,k,d;c]]
    CodeParams,    // (n, 2^size_log2, d) additive code known only by its parameters
};

struct CatalogEntry {
    std::string name;
    EntryKind kind = EntryKind::Code;
    std::optional<CodeRecord> code;
    size_t n = 0;
    size_t k = 0;
    std::optional<size_t> d;
    size_t c = 0;
    size_t size_log2 = 0;
    // QeccParams: name of a Code entry holding the stabilizer.
    std::string stabilizer;
    std::string provenance;
    size_t line = 0;
};

class CodeCatalog {
   public:
    void add(CatalogEntry e) {
        if (index_.count(e.name)) {
            throw FormatError("duplicate catalog entry '" + e.name + "'");
        }
        index_[e.name] = entries_.size();
        entries_.push_back(std::move(e));
    }
    const std::vector<CatalogEntry> &entries() const {
        return entries_;
    }
    const CatalogEntry *find(const std::string &name) const {
        auto it = index_.find(name);
        return it == index_.end() ? nullptr : &entries_[it->second];
    }

   private:
    std::vector<CatalogEntry> entries_;
    std::unordered_map<std::string, size_t> index_;
};

namespace internal {

/// 1-based line of each element of a top-level JSON array.
inline std::vector<size_t> array_element_lines(const std::string &text) {
    std::vector<size_t> lines;
    size_t line = 1;
    int depth = 0;
    bool in_string = false;
    bool escape = false;
    bool expect_element = false;
    for (char ch : text) {
        if (ch == '\n') {
            line++;
        }
        if (in_string) {
            if (escape) {
                escape = false;
            } else if (ch == '\\') {
                escape = true;
            } else if (ch == '"') {
                in_string = false;
            }
            continue;
        }
        if (expect_element && depth == 1 && !std::isspace(static_cast<unsigned char>(ch)) && ch != ']') {
            lines.push_back(line);
            expect_element = false;
        }
        switch (ch) {
            case '"':
                in_string = true;
                break;
            case '[':
            case '{':
                depth++;
                if (depth == 1) {
                    expect_element = true;
                }
                break;
            case ']':
            case '}':
                depth--;
                break;
            case ',':
                if (depth == 1) {
                    expect_element = true;
                }
                break;
            default:
                break;
        }
    }
    return lines;
}

inline CatalogEntry params_entry(const Json &j, const std::string &at) {
    CatalogEntry e;
    e.name = j["name"].get<std::string>();
    auto kind = j["kind"].get<std::string>();
    e.n = require_size(j, "n", at);
    if (kind == "code_params") {
        e.kind = EntryKind::CodeParams;
        e.size_log2 = require_size(j, "size_log2", at);
        if (e.size_log2 > 2 * e.n) {
            throw FormatError(at + ": size 2^" + std::to_string(e.size_log2) + " exceeds 4^n");
        }
    } else {
        e.kind = kind == "qecc_params" ? EntryKind::QeccParams : EntryKind::EaqeccParams;
        e.k = require_size(j, "k", at);
        if (e.kind == EntryKind::EaqeccParams) {
            e.c = require_size(j, "c", at);
        }
        if (e.k + e.c > e.n) {
            throw FormatError(at + ": k + c exceeds n");
        }
    }
    if (j.contains("d") && !j["d"].is_null()) {
        e.d = require_size(j, "d", at);
    }
    e.stabilizer = j.value("stabilizer", std::string());
    e.provenance = j.value("provenance", std::string());
    return e;
}

}  // namespace internal

/// Parses a catalog: a JSON array of code objects and parameter-only objects
/// with kind "qecc_params", "eaqecc_params" or "code_params".
inline CodeCatalog parse_catalog(const std::string &text, const std::string &origin) {
    auto j = parse_json_text(text, origin);
    if (!j.is_array()) {
        throw FormatError(origin + ":1: catalog must be a JSON array");
    }
    auto lines = internal::array_element_lines(text);
    CodeCatalog cat;
    for (size_t i = 0; i < j.size(); i++) {
        size_t line = i < lines.size() ? lines[i] : 0;
        std::string at = origin + ":" + std::to_string(line);
        const auto &obj = j[i];
        try {
            if (!obj.is_object() || !obj.contains("name") || !obj["name"].is_string()) {
                throw FormatError(at + ": entry needs a string 'name'");
            }
            auto kind = obj.value("kind", std::string("additive"));
            CatalogEntry e;
            if (kind == "additive" || kind == "linear") {
                e.code = code_record_from_json(obj, at + ": code");
                e.name = e.code->name;
                e.kind = EntryKind::Code;
                e.n = e.code->length;
                e.size_log2 = e.code->claimed_size_log2 ? *e.code->claimed_size_log2 : e.code->additive().m();
                e.d = e.code->claimed_min_distance;
                e.provenance = e.code->provenance;
            } else if (kind == "qecc_params" || kind == "eaqecc_params" || kind == "code_params") {
                e = internal::params_entry(obj, at + ": entry '" + obj["name"].get<std::string>() + "'");
            } else {
                throw FormatError(at + ": unknown kind '" + kind + "'");
            }
            e.line = line;
            cat.add(std::move(e));
        } catch (const FormatError &err) {
            std::string msg = err.what();
            throw FormatError(msg.rfind(origin, 0) == 0 ? msg : at + ": " + msg);
        } catch (const nlohmann::json::exception &err) {
            throw FormatError(at + ": " + err.what());
        }
    }
    for (const auto &e : cat.entries()) {
        if (e.stabilizer.empty()) {
            continue;
        }
        auto *s = cat.find(e.stabilizer);
        if (!s || s->kind != EntryKind::Code) {
            throw FormatError(origin + ":" + std::to_string(e.line) + ": entry '" + e.name +
                              "' names missing stabilizer '" + e.stabilizer + "'");
        }
        if (s->n != e.n || s->size_log2 != e.n - e.k) {
            throw FormatError(origin + ":" + std::to_string(e.line) + ": stabilizer '" + e.stabilizer +
                              "' has the wrong shape for " + QeccParams{e.n, e.k, e.d}.str());
        }
    }
    return cat;
}

inline CodeCatalog load_catalog(const std::string &path) {
    return parse_catalog(read_text_file(path), path);
}

struct ProtectorChoice {
    QeccParams params;
    std::string source;  // catalog entry name, or "bound"
    bool from_bound = false;
};

/// Shortest catalogued [[m, k_b, d_b]] with k_b >= c and d_b >= 3; ties go to
/// the smaller k_b, then to catalog order. Falls back to protector_bound.
inline ProtectorChoice lookup_protector(const CodeCatalog &cat, size_t c) {
    const CatalogEntry *best = nullptr;
    for (const auto &e : cat.entries()) {
        if (e.kind != EntryKind::QeccParams || e.k < c || !e.d || *e.d < 3) {
            continue;
        }
        if (!best || e.n < best->n || (e.n == best->n && e.k < best->k)) {
            best = &e;
        }
    }
    if (best) {
        return {{best->n, best->k, best->d}, best->name, false};
    }
    auto b = protector_bound(c);
    return {{b.m, c, 3}, "bound", true};
}

enum class SuiteStatus { Verified, ParametersOnly, Failed };

inline std::string to_string(SuiteStatus s) {
    switch (s) {
        case SuiteStatus::Verified:
            return "verified";
        case SuiteStatus::ParametersOnly:
            return "parameters-only";
        default:
            return "failed";
    }
}

struct SuiteRow {
    std::string group;
    std::string label;
    CombinationParams stated;
    MatchFlags match;
    SuiteStatus status = SuiteStatus::ParametersOnly;
    std::vector<std::string> notes;
    // Combination rows only.
    std::string d_code;
    std::string e_code;
    std::optional<size_t> bound_d;  // d1 + d2
    std::optional<size_t> derived_c;
    std::optional<size_t> computed_d;
    std::optional<size_t> c_sgs;
    std::optional<bool> bound_ok;
    std::optional<uint64_t> trial;
    // Protector realized by catalog data and checked by enumeration.
    std::optional<bool> protector_verified;
    std::string protector_source;
};

struct SuiteOptions {
    bool verify_distance = false;
    EnumerationOptions enumeration;
    uint64_t budget = 10000;
    uint64_t seed = 1;
};

namespace internal {

struct CombinationSpec {
    CombinationParams stated;
    std::string d_code;
    size_t split_l;
    std::string e_code;
};

inline CombinationParams stated(size_t n, size_t k, size_t d, size_t c, size_t m, size_t kb, size_t db) {
    EaqeccParams ea;
    ea.n = n;
    ea.k = k;
    ea.d = d;
    ea.c = c;
    ea.l = n - k - c;
    return {ea, {m, kb, db}};
}

inline const std::vector<CombinationSpec> &combination_specs() {
    static const std::vector<CombinationSpec> specs = {
        {stated(14, 2, 7, 4, 10, 4, 3), "dodecacode", 8, "E_2_4_1"},
        {stated(15, 2, 8, 5, 12, 6, 3), "dodecacode", 8, "E_3_4_2"},
        {stated(16, 2, 7, 4, 10, 4, 3), "self_dual_14", 10, "E_2_4_1"},
        {stated(17, 2, 8, 5, 12, 6, 3), "self_dual_14", 10, "E_3_4_2"},
        {stated(20, 2, 9, 4, 10, 4, 3), "self_dual_18", 14, "E_2_4_1"},
        {stated(21, 2, 9, 5, 12, 6, 3), "self_dual_18", 14, "E_3_4_2"},
        {stated(30, 3, 13, 9, 15, 9, 3), "self_orthogonal_27", 18, "E_3_6_1"},
        {stated(31, 3, 13, 8, 15, 9, 3), "self_orthogonal_28", 20, "E_3_6_1"},
        {stated(33, 3, 13, 6, 12, 6, 3), "self_dual_30", 24, "E_3_6_1"},
    };
    return specs;
}

inline std::vector<CombinationParams> family_specs() {
    std::vector<CombinationParams> out;
    for (size_t m : {2, 3}) {
        out.push_back(stated(4 * m, 1, 2 * m + 1, 1, 5, 1, 3));
        out.push_back(stated(4 * m + 1, 1, 2 * m + 3, 4, 10, 4, 3));
        out.push_back(stated(4 * m + 2, 1, 2 * m + 3, 3, 8, 3, 3));
        out.push_back(stated(4 * m + 3, 1, 2 * m + 3, 2, 8, 2, 3));
    }
    out.push_back(stated(7, 2, 5, 5, 11, 5, 3));
    out.push_back(stated(8, 2, 5, 4, 10, 4, 3));
    out.push_back(stated(9, 2, 5, 3, 8, 3, 3));
    out.push_back(stated(10, 2, 6, 4, 10, 4, 3));
    out.push_back(stated(9, 3, 6, 6, 12, 6, 3));
    out.push_back(stated(13, 3, 9, 10, 16, 10, 3));
    out.push_back(stated(12, 4, 7, 8, 14, 8, 3));
    return out;
}

inline void check_protector(const CodeCatalog &cat, const SuiteOptions &opts, SuiteRow &row) {
    const auto &want = row.stated.protector;
    for (const auto &e : cat.entries()) {
        if (e.kind != EntryKind::QeccParams || e.n != want.n || e.k != want.k || e.d != want.d) {
            continue;
        }
        row.protector_source = e.name;
        if (e.stabilizer.empty()) {
            return;
        }
        row.protector_source = e.stabilizer;
        if (!opts.verify_distance) {
            return;
        }
        auto got = qecc_params(cat.find(e.stabilizer)->code->additive(), true, opts.enumeration);
        row.protector_verified = got == want;
        if (!*row.protector_verified) {
            row.notes.push_back("protector stabilizer '" + e.stabilizer + "' gives " + got.str());
        }
        return;
    }
    row.notes.push_back("no catalogued protector " + want.str());
}

inline bool exceeds_cap(size_t log2_size, uint64_t cap) {
    return log2_size >= 63 || (uint64_t{1} << log2_size) > cap;
}

inline SuiteRow combination_row(const CodeCatalog &cat, const CombinationSpec &spec, const SuiteOptions &opts) {
    SuiteRow row;
    row.group = "combination";
    row.stated = spec.stated;
    row.label = spec.stated.str();
    row.d_code = spec.d_code;
    row.e_code = spec.e_code;
    row.match = match_check(spec.stated.ea, spec.stated.protector);
    check_protector(cat, opts, row);

    auto *de = cat.find(spec.d_code);
    auto *ee = cat.find(spec.e_code);
    if (!de || !ee) {
        row.notes.push_back("ingredient missing from catalog: " + std::string(!de ? spec.d_code : spec.e_code));
        row.status = SuiteStatus::ParametersOnly;
        return row;
    }
    size_t n = de->n;
    size_t m = ee->n;
    size_t k = ee->size_log2 / 2;
    row.derived_c = n + m - spec.split_l - k;
    if (de->d && ee->d) {
        row.bound_d = *de->d + *ee->d;
    }
    if (n + m != spec.stated.ea.n || k != spec.stated.ea.k || *row.derived_c != spec.stated.ea.c) {
        row.notes.push_back("ingredients give [[" + std::to_string(n + m) + "," + std::to_string(k) + ",?;" +
                            std::to_string(*row.derived_c) + "]]");
    }
    if (row.bound_d && *row.bound_d != *spec.stated.ea.d) {
        row.notes.push_back("listed d = " + std::to_string(*spec.stated.ea.d) + " but the construction bound gives d >= " +
                            std::to_string(*row.bound_d));
    }

    bool beyond_cap = exceeds_cap(de->size_log2, opts.enumeration.max_codewords);
    if (beyond_cap) {
        row.notes.push_back("enumeration exceeds cap: D has 2^" + std::to_string(de->size_log2) +
                            " codewords, cap is " + std::to_string(opts.enumeration.max_codewords));
    }
    if (!de->code || !ee->code) {
        row.notes.push_back("no generator data for '" + std::string(!de->code ? de->name : ee->name) + "'");
    }
    if (!opts.verify_distance || !de->code || !ee->code || beyond_cap) {
        row.status = SuiteStatus::ParametersOnly;
        return row;
    }

    auto d = de->code->additive();
    auto e = ee->code->additive();
    auto found = search_theorem43(d, spec.split_l, e, row.bound_d.value_or(0), opts.budget, opts.seed,
                                  opts.enumeration);
    if (!found) {
        row.status = SuiteStatus::Failed;
        row.notes.push_back("no splitting reached the bound within the search budget");
        return row;
    }
    const auto &b = found->build;
    row.trial = found->trial;
    row.computed_d = b.params.d;
    row.c_sgs = b.c_sgs;
    row.bound_ok = b.bound_ok;
    bool ok = *b.bound_ok && b.c_sgs == b.params.c && b.params.c == *row.derived_c &&
              row.protector_verified.value_or(true);
    if (*b.params.d != *spec.stated.ea.d) {
        row.notes.push_back("computed d = " + std::to_string(*b.params.d) + ", listed d = " +
                            std::to_string(*spec.stated.ea.d));
    }
    row.status = ok ? SuiteStatus::Verified : SuiteStatus::Failed;
    return row;
}

}  // namespace internal

/// The nine combination codes built from self-dual/self-orthogonal codes, then
/// the parameter-level EAQECC families paired with catalogued protectors.
inline std::vector<SuiteRow> corollary44_suite(const CodeCatalog &cat, const SuiteOptions &opts = {}) {
    std::vector<SuiteRow> rows;
    for (const auto &spec : internal::combination_specs()) {
        rows.push_back(internal::combination_row(cat, spec, opts));
    }
    for (const auto &p : internal::family_specs()) {
        SuiteRow row;
        row.group = "ea-family";
        row.stated = p;
        row.label = p.str();
        row.match = match_check(p.ea, p.protector);
        internal::check_protector(cat, opts, row);
        auto best = lookup_protector(cat, p.ea.c);
        if (best.params.n < p.protector.n) {
            row.notes.push_back("shorter protector available: " + best.params.str() + " (" + best.source + ")");
        }
        row.notes.push_back("EAQECC parameters taken as given");
        row.status = row.match.faithful && row.protector_verified.value_or(true) ? SuiteStatus::ParametersOnly
                                                                                 : SuiteStatus::Failed;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace eaqecc

#endif

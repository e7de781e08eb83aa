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

#ifndef EAQECC_IO_HPP
#define EAQECC_IO_HPP

#include <cctype>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "eaqecc/additive_code.hpp"
#include "eaqecc/ea_params.hpp"
#include "eaqecc/linear_code.hpp"

namespace eaqecc {

using Json = nlohmann::ordered_json;

/// Raised for malformed code or catalog files.
class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class CodeKind { Additive, Linear };

/// One code object of the JSON schema
/// {"name", "length", "kind", "generators", "claimed": {"size_log2", "min_distance"}}.
struct CodeRecord {
    std::string name;
    size_t length = 0;
    CodeKind kind = CodeKind::Additive;
    std::vector<std::string> generators;
    std::optional<size_t> claimed_size_log2;
    std::optional<size_t> claimed_min_distance;
    std::string provenance;

    /// The code as an additive code (a linear code contributes {b, w b} per basis row).
    AdditiveCode additive() const {
        if (kind == CodeKind::Linear) {
            return linear().as_additive();
        }
        return AdditiveCode::from_strings(length, generators);
    }

    LinearCode linear() const {
        if (kind != CodeKind::Linear) {
            throw FormatError("code '" + name + "' is not declared linear");
        }
        return LinearCode::from_strings(length, generators);
    }
};

inline std::string to_string(CodeKind k) {
    return k == CodeKind::Linear ? "linear" : "additive";
}

namespace internal {

inline size_t require_size(const Json &j, const char *key, const std::string &where) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) {
        throw FormatError(where + ": field '" + key + "' must be a nonnegative integer");
    }
    return j[key].get<size_t>();
}

}  // namespace internal

inline CodeRecord code_record_from_json(const Json &j, const std::string &where = "code") {
    if (!j.is_object()) {
        throw FormatError(where + ": expected a JSON object");
    }
    CodeRecord r;
    if (!j.contains("name") || !j["name"].is_string()) {
        throw FormatError(where + ": field 'name' must be a string");
    }
    r.name = j["name"].get<std::string>();
    std::string at = where + " '" + r.name + "'";
    r.length = internal::require_size(j, "length", at);
    auto kind = j.value("kind", std::string("additive"));
    if (kind == "additive") {
        r.kind = CodeKind::Additive;
    } else if (kind == "linear") {
        r.kind = CodeKind::Linear;
    } else {
        throw FormatError(at + ": unknown kind '" + kind + "'");
    }
    if (!j.contains("generators") || !j["generators"].is_array()) {
        throw FormatError(at + ": field 'generators' must be an array of strings");
    }
    for (const auto &g : j["generators"]) {
        if (!g.is_string()) {
            throw FormatError(at + ": generator entries must be strings");
        }
        auto s = g.get<std::string>();
        if (s.size() != r.length) {
            throw FormatError(at + ": generator '" + s + "' has length " + std::to_string(s.size()) +
                              ", expected " + std::to_string(r.length));
        }
        for (char c : s) {
            if (c != '0' && c != '1' && c != 'w' && c != 'W') {
                throw FormatError(at + ": generator '" + s + "' uses a symbol outside 0/1/w/W");
            }
        }
        r.generators.push_back(std::move(s));
    }
    if (j.contains("claimed")) {
        const auto &c = j["claimed"];
        if (!c.is_object()) {
            throw FormatError(at + ": 'claimed' must be an object");
        }
        if (c.contains("size_log2") && !c["size_log2"].is_null()) {
            r.claimed_size_log2 = internal::require_size(c, "size_log2", at + " claimed");
        }
        if (c.contains("min_distance") && !c["min_distance"].is_null()) {
            r.claimed_min_distance = internal::require_size(c, "min_distance", at + " claimed");
        }
    }
    r.provenance = j.value("provenance", std::string());
    // Building the code validates independence.
    size_t size_log2;
    try {
        size_log2 = r.additive().m();
    } catch (const std::invalid_argument &e) {
        throw FormatError(at + ": " + e.what());
    }
    if (r.claimed_size_log2 && *r.claimed_size_log2 != size_log2) {
        throw FormatError(at + ": claimed size 2^" + std::to_string(*r.claimed_size_log2) +
                          " but generators span 2^" + std::to_string(size_log2));
    }
    return r;
}

inline Json to_json(const CodeRecord &r) {
    Json j;
    j["name"] = r.name;
    j["length"] = r.length;
    j["kind"] = to_string(r.kind);
    j["generators"] = r.generators;
    Json claimed;
    claimed["size_log2"] = r.claimed_size_log2 ? Json(*r.claimed_size_log2) : Json(nullptr);
    claimed["min_distance"] = r.claimed_min_distance ? Json(*r.claimed_min_distance) : Json(nullptr);
    j["claimed"] = claimed;
    if (!r.provenance.empty()) {
        j["provenance"] = r.provenance;
    }
    return j;
}

inline CodeRecord make_record(const std::string &name, const AdditiveCode &c) {
    CodeRecord r;
    r.name = name;
    r.length = c.length();
    for (const auto &g : c.generators()) {
        r.generators.push_back(g.str());
    }
    r.claimed_size_log2 = c.m();
    return r;
}

inline CodeRecord make_record(const std::string &name, const LinearCode &c) {
    CodeRecord r;
    r.name = name;
    r.length = c.length();
    r.kind = CodeKind::Linear;
    for (const auto &g : c.basis()) {
        r.generators.push_back(g.str());
    }
    r.claimed_size_log2 = 2 * c.k();
    return r;
}

/// Parses JSON text, reporting syntax errors as "origin:line:column: message".
inline Json parse_json_text(const std::string &text, const std::string &origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        size_t line = 1;
        size_t col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); i++) {
            if (text[i] == '\n') {
                line++;
                col = 1;
            } else {
                col++;
            }
        }
        std::string msg = e.what();
        auto cut = msg.find("parse error");
        throw FormatError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                          (cut == std::string::npos ? msg : msg.substr(cut)));
    }
}

inline std::string read_text_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline CodeRecord load_code_file(const std::string &path) {
    return code_record_from_json(parse_json_text(read_text_file(path), path), path);
}

/// Inline parameter tuples: "n,k,d" / "n,k,d,c", optionally written as
/// "[[n,k,d]]" / "[[n,k,d;c]]".
inline std::vector<size_t> parse_param_tuple(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c))) {
            continue;
        }
        s.push_back(c == ';' ? ',' : c);
    }
    std::vector<size_t> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        auto next = s.find(',', pos);
        auto tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("malformed parameter tuple '" + std::string(text) + "'");
        }
        out.push_back(std::stoul(tok));
        if (next == std::string::npos) {
            break;
        }
        pos = next + 1;
    }
    return out;
}

inline QeccParams parse_qecc_params(std::string_view text) {
    auto v = parse_param_tuple(text);
    if (v.size() != 3 || v[1] > v[0]) {
        throw std::invalid_argument("expected QECC parameters n,k,d with k <= n, got '" + std::string(text) + "'");
    }
    return {v[0], v[1], v[2]};
}

inline EaqeccParams parse_eaqecc_params(std::string_view text) {
    auto v = parse_param_tuple(text);
    if (v.size() != 4 || v[1] + v[3] > v[0]) {
        throw std::invalid_argument("expected EAQECC parameters n,k,d,c with k + c <= n, got '" + std::string(text) +
                                    "'");
    }
    EaqeccParams p;
    p.n = v[0];
    p.k = v[1];
    p.d = v[2];
    p.c = v[3];
    p.l = p.n - p.k - p.c;
    return p;
}

inline Json to_json(const QeccParams &p) {
    Json j;
    j["params"] = p.str();
    j["n"] = p.n;
    j["k"] = p.k;
    j["d"] = p.d ? Json(*p.d) : Json(nullptr);
    if (p.degenerate_k0) {
        j["degenerate"] = "k=0";
    }
    return j;
}

inline Json to_json(const EaqeccParams &p) {
    Json j;
    j["params"] = p.str();
    j["n"] = p.n;
    j["k"] = p.k;
    j["d"] = p.d ? Json(*p.d) : Json(nullptr);
    j["c"] = p.c;
    j["l"] = p.l;
    if (p.degenerate_k0) {
        j["degenerate"] = "k=0";
    }
    if (p.equivalent_to_qecc) {
        j["equivalent_to_qecc"] = true;
    }
    return j;
}

inline Json to_json(const MatchFlags &f) {
    Json j;
    j["matches"] = f.matches;
    j["faithful"] = f.faithful;
    j["proper"] = f.proper;
    return j;
}

inline Json to_json(const CombinationParams &p) {
    Json j;
    j["params"] = p.str();
    j["ea"] = to_json(p.ea);
    j["protector"] = to_json(p.protector);
    j["match"] = to_json(match_check(p.ea, p.protector));
    return j;
}

}  // namespace eaqecc

#endif

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

#ifndef EAQECC_TESTS_FIXTURES_HPP
#define EAQECC_TESTS_FIXTURES_HPP

#include <string>

#include "eaqecc.hpp"

namespace fixtures {

inline std::string path(const std::string &name) {
    return std::string(EAQECC_DATA_DIR) + "/fixtures/" + name + ".json";
}

inline eaqecc::AdditiveCode code(const std::string &name) {
    return eaqecc::load_code_file(path(name)).additive();
}

inline eaqecc::CodeCatalog catalog() {
    return eaqecc::load_catalog(std::string(EAQECC_DATA_DIR) + "/catalog.json");
}

inline eaqecc::Theorem43Input t43(const std::string &name) {
    auto j = eaqecc::parse_json_text(eaqecc::read_text_file(path(name)), name);
    auto gens = [&](const char *key) { return j[key].get<std::vector<std::string>>(); };
    size_t n = j["n"].get<size_t>();
    size_t m = j["m"].get<size_t>();
    return {eaqecc::AdditiveCode::from_strings(n, gens("C")), eaqecc::AdditiveCode::from_strings(n, gens("Cprime")),
            eaqecc::AdditiveCode::from_strings(m, gens("E"))};
}

}  // namespace fixtures

#endif

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

// Walks the library end to end: a self-dual code, a combination code built
// from it, a protector for its ebits, and the noise threshold at which the
// combination matches a standard code of the same distance.

#include <iostream>
#include <string>

#include "eaqecc.hpp"

using namespace eaqecc;

int main() {
    const std::string data = EAQECC_DATA_DIR;
    auto catalog = load_catalog(data + "/catalog.json");

    auto d = load_code_file(data + "/fixtures/dodecacode.json").additive();
    auto cls = classify(d);
    std::cout << "dodecacode: (" << d.length() << ",2^" << d.m() << "," << min_weight(d).min_weight << ")"
              << (cls.trace_self_orthogonal && cls.dual_containing ? ", trace self-dual" : "") << "\n";

    auto e = load_code_file(data + "/fixtures/E_2_4_1.json").additive();
    auto found = search_theorem43(d, 8, e, 7, 100, 1);
    if (!found) {
        std::cout << "no splitting found\n";
        return 1;
    }
    const auto &ea = found->build.params;
    std::cout << "combination code " << ea.str() << " (l = " << ea.l << "), search trial " << found->trial << "\n";

    auto protector = lookup_protector(catalog, ea.c);
    auto flags = match_check(ea, protector.params);
    std::cout << "protector for c = " << ea.c << ": " << protector.params.str() << " from " << protector.source
              << (flags.faithful ? ", faithful" : "") << (flags.proper ? ", proper" : "") << "\n";

    BlockCode ref{18, 7};
    std::cout << "threshold against a length-18, distance-7 reference code:\n" << kComparisonCsvHeader << "\n";
    for (double p_a : {0.01, 0.03, 0.05}) {
        auto rows = comparison_table({ea.n, *ea.d}, {protector.params.n, *protector.params.d}, ref, {p_a});
        std::cout << csv_line(rows[0]) << "\n";
    }
    return 0;
}

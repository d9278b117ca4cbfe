// Copyright 2026 The dimercmg Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

// Acceptance criteria: one PASS/FAIL line each, exit status 1 if any fails.

#include <cstdlib>
#include <iostream>
#include <map>

#include "dimercmg/verify.hpp"

using namespace dimercmg;

int main(int argc, char** argv) {
    VerifyOptions opts;
    opts.seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20261016;
    opts.data_dir = DIMERCMG_DATA_DIR;

    std::map<std::string, CheckResult> by_id;
    for (const auto& suite : suite_names())
        for (auto& c : run_suite(suite, opts).checks) by_id[c.id] = c;

    // Runtime bounds stated with the criteria, in seconds.
    const std::map<std::string, double> limit{{"C1", 1}, {"C2", 30}, {"C6", 60}, {"C8", 60}};
    int failed = 0;
    for (int i = 1; i <= 10; ++i) {
        const auto id = "C" + std::to_string(i);
        auto it = by_id.find(id);
        if (it == by_id.end()) {
            std::cout << "FAIL " << id << " not run\n";
            ++failed;
            continue;
        }
        auto c = it->second;
        if (auto l = limit.find(id); l != limit.end() && c.seconds > l->second) {
            c.passed = false;
            c.detail += " (took " + std::to_string(c.seconds) + " s, limit " + std::to_string(l->second) + " s)";
        }
        std::cout << (c.passed ? "PASS " : "FAIL ") << id << " " << c.description << ": " << c.detail << "\n";
        failed += !c.passed;
    }
    std::cout << (10 - failed) << "/10 criteria passed (seed " << opts.seed << ")\n";
    return failed ? 1 : 0;
}

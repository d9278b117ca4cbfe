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

// Verification suites shared by `dimercmg verify-all` and the acceptance binary.
#pragma once
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dimercmg/torus_graph.hpp"

namespace dimercmg {

struct VerifyOptions {
    std::uint64_t seed = 7;
    /// Directory of <catalog name>.json graph files replacing the embedded ones.
    std::optional<std::filesystem::path> catalog_dir;
    /// Directory holding scripts/domino.json; the built-in script is used when unset.
    std::optional<std::filesystem::path> data_dir;
};

struct CheckResult {
    std::string id;           // "C1" ... "C10", or a short name for extra checks
    std::string description;
    bool passed = false;
    std::string detail;       // failure reason, or a short summary of what was checked
    double seconds = 0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// group, moves, spectral, appendix.
std::vector<std::string> suite_names();

/// Throws InvalidInput for an unknown suite name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts);

/// Catalog entry under the options: the embedded graph, or the file override checked
/// against the embedded metadata.
CatalogEntry suite_catalog(const std::string& name, const VerifyOptions& opts);

}  // namespace dimercmg

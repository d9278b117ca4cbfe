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

#pragma once
#include <stdexcept>
#include <string>
#include <string_view>

namespace dimercmg {

// Error kinds surfaced by the library. The names double as the strings the
// CLI prints, so keep them stable.
enum class ErrorCode {
    NotConvex,
    NotClosed,
    RepeatedVertex,
    Degenerate,
    NotUnimodular,
    NoInteriorPoint,
    DimensionMismatch,
    NotBipartite,
    Disconnected,
    NonContractibleFace,
    EulerMismatch,
    InvalidGraph,
    TrivialZigZag,
    UnknownCatalogEntry,
    NotQuadFace,
    WrongColorPattern,
    NotTwoValent,
    MoveNotApplicable,
    ClosingIsomorphismInvalid,
    StrandMatchAmbiguous,
    InconsistentAbelMap,
    UnbalancedColors,
    NoValidSignAssignment,
    ZeroPolynomial,
    InvalidInput,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace dimercmg

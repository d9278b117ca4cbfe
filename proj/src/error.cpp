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

#include "dimercmg/error.hpp"

namespace dimercmg {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotConvex: return "NotConvex";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::RepeatedVertex: return "RepeatedVertex";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::NotUnimodular: return "NotUnimodular";
        case ErrorCode::NoInteriorPoint: return "NoInteriorPoint";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::NonContractibleFace: return "NonContractibleFace";
        case ErrorCode::EulerMismatch: return "EulerMismatch";
        case ErrorCode::InvalidGraph: return "InvalidGraph";
        case ErrorCode::TrivialZigZag: return "TrivialZigZag";
        case ErrorCode::UnknownCatalogEntry: return "UnknownCatalogEntry";
        case ErrorCode::NotQuadFace: return "NotQuadFace";
        case ErrorCode::WrongColorPattern: return "WrongColorPattern";
        case ErrorCode::NotTwoValent: return "NotTwoValent";
        case ErrorCode::MoveNotApplicable: return "MoveNotApplicable";
        case ErrorCode::ClosingIsomorphismInvalid: return "ClosingIsomorphismInvalid";
        case ErrorCode::StrandMatchAmbiguous: return "StrandMatchAmbiguous";
        case ErrorCode::InconsistentAbelMap: return "InconsistentAbelMap";
        case ErrorCode::UnbalancedColors: return "UnbalancedColors";
        case ErrorCode::NoValidSignAssignment: return "NoValidSignAssignment";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

}  // namespace dimercmg

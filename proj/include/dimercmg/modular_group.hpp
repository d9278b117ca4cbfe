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
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dimercmg/intlin.hpp"
#include "dimercmg/lattice_polygon.hpp"

namespace dimercmg {

/// j : H_1(T,Z) -> Z^{E_N}. Row rho of B is m -> <E_rho, m>.
struct EmbeddingJ {
    ConvexIntegralPolygon polygon;
    IntMatrix B;
};

enum class GroupCase { InteriorPoint, NoInteriorPoint };
std::string_view case_name(GroupCase c);

struct ClusterModularGroupResult {
    FgAbelianGroup group;
    std::int64_t genus = 0;
    GroupCase case_tag = GroupCase::InteriorPoint;
};

struct RationalVector {
    Rational x;
    Rational y;
    friend bool operator==(const RationalVector&, const RationalVector&) = default;
};

/// The lattice L = {m in H_1(T,Q) : j(m) integral}, containing H_1(T,Z).
struct TorsionLattice {
    std::array<RationalVector, 2> basis;  // (a,0), (b,c) with a,c > 0 and -a < b <= 0
    std::array<Int, 2> denominators;      // lcm of the coordinate denominators per vector
    Int index;                            // [L : H_1(T,Z)]
};

struct MaxTranslationPolygon {
    std::array<RationalVector, 2> basis;
    /// Coefficients of w_rho in `basis`, one row per edge of N.
    std::vector<std::array<Int, 2>> w_coefficients;
    /// The polygon with edge vectors w_rho, in coefficient coordinates.
    ConvexIntegralPolygon polygon;
};

struct Pic0Presentation {
    std::vector<std::string> generators;  // L_rho = O((1/|E_rho|) D_rho)
    /// Columns are relations among the generators.
    IntMatrix relations;
    FgAbelianGroup group;
};

EmbeddingJ build_j(const ConvexIntegralPolygon& p);

/// A = Z^{E_N} / j H_1.
FgAbelianGroup ambient_quotient(const ConvexIntegralPolygon& p);

/// Coordinates of f in Z^{E}_0 with respect to the basis e_rho - e_{rho+1}.
/// Throws InvalidInput when a column does not sum to zero.
IntMatrix sum_zero_coordinates(const IntMatrix& f);

ClusterModularGroupResult cluster_modular_group(const ConvexIntegralPolygon& p);

/// Throws NoInteriorPoint when g = 0.
TorsionLattice torsion_lattice(const ConvexIntegralPolygon& p);

/// Uses the Hermite basis of L unless `basis` is given (it must generate L).
/// Throws NoInteriorPoint when g = 0, InvalidInput for a basis not spanning L.
MaxTranslationPolygon max_translation_polygon(const ConvexIntegralPolygon& p,
                                              std::optional<std::array<RationalVector, 2>> basis = {});

/// Degree-zero part of the Picard group of the toric stack, built from the
/// stacky fan e_rho -> |E_rho| u_rho. Throws NoInteriorPoint when g = 0.
Pic0Presentation pic0_stack_presentation(const ConvexIntegralPolygon& p);

}  // namespace dimercmg

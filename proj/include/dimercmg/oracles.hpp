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

// Independent recomputations used by the property tests and the verification suites.
#pragma once
#include <set>
#include <vector>

#include "dimercmg/intlin.hpp"
#include "dimercmg/lattice_polygon.hpp"

namespace dimercmg {

/// Torsion of Z^n / B Z^2 from determinantal divisors of an n x 2 matrix.
std::vector<Int> torsion_by_minors(const IntMatrix& B);

/// Invariant factors of a finite abelian group given by all its elements inside prod Z/mods[i].
std::vector<Int> invariant_factors_by_counting(const std::set<std::vector<long>>& elems, const std::vector<long>& mods);

/// Genus-zero group as the subgroup of prod Z/|E_rho| generated by e_rho - e_{rho+1},
/// enumerated element by element.
FgAbelianGroup genus_zero_by_enumeration(const ConvexIntegralPolygon& p);

}  // namespace dimercmg

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
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dimercmg/laurent.hpp"
#include "dimercmg/torus_graph.hpp"

namespace dimercmg {

/// Formal integer combination of zig-zag labels nu(alpha).
using Divisor = std::vector<std::int64_t>;

std::int64_t degree(const Divisor& d);
Divisor operator+(Divisor a, const Divisor& b);
Divisor operator-(Divisor a, const Divisor& b);

/// div chi^m = sum_alpha <alpha, m> nu(alpha), one entry per label class.
Divisor div_character(const std::vector<LatticeVector>& classes, LatticeVector m);

/// Abel map values on the vertex representatives; a translate v + m carries
/// values[v] + div_character(m).
struct AbelMap {
    std::size_t base_white = 0;
    std::vector<LatticeVector> classes;  // homology class per label
    std::vector<Divisor> values;         // per vertex index
};

/// Labels are the zig-zag indices of g. Throws InconsistentAbelMap.
AbelMap discrete_abel_map(const TorusGraph& g, std::optional<std::size_t> base_white = {});

/// Propagates the local rule d(w) = d(b) - nu(alpha) - nu(beta) from the given
/// seed values, where zig-zag z of g carries label label_of_zigzag[z].
/// Verifies every edge afterwards. Throws InconsistentAbelMap.
std::vector<Divisor> propagate_abel(const TorusGraph& g, const std::vector<std::size_t>& label_of_zigzag,
                                    const std::vector<LatticeVector>& label_classes,
                                    const std::map<std::size_t, Divisor>& seeds);

/// Kasteleyn sign per edge (+1/-1): every face of degree 2k has sign product (-1)^(k+1).
/// Throws NoValidSignAssignment.
std::vector<int> kasteleyn_signs(const TorusGraph& g);

/// det K(z, w), rows black, columns white, entry sum of sign * weight * z^a w^b over
/// edges with black-to-white displacement (a, b). Throws UnbalancedColors.
LaurentPoly2 kasteleyn_polynomial(const TorusGraph& g, const EdgeWeights& w);

/// Same polynomial by enumerating perfect matchings of the fundamental domain with
/// permutation signs. Exponential; desk-scale graphs only.
LaurentPoly2 dimer_cover_expansion(const TorusGraph& g, const EdgeWeights& w);

/// Fraction-free determinant over the Laurent polynomial ring.
LaurentPoly2 determinant(std::vector<std::vector<LaurentPoly2>> m);

}  // namespace dimercmg

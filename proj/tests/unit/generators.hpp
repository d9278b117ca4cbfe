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

// Seeded generators for the property tests.
#pragma once
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dimercmg/intlin.hpp"
#include "dimercmg/lattice_polygon.hpp"
#include "dimercmg/torus_graph.hpp"

namespace testgen {

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed1234ULL);
    return g;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline dimercmg::IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::int64_t bound) {
    dimercmg::IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(uniform(-bound, bound));
    return m;
}

// Low-rank matrices exercise the kernel and torsion paths.
inline dimercmg::IntMatrix random_low_rank(std::size_t rows, std::size_t cols, std::size_t rank, std::int64_t bound) {
    return random_matrix(rows, rank, bound) * random_matrix(rank, cols, bound);
}

inline dimercmg::IntVector random_vector(std::size_t n, std::int64_t bound) {
    dimercmg::IntVector v(n);
    for (auto& x : v) x = static_cast<long>(uniform(-bound, bound));
    return v;
}

// Hull of a few random points in a box; retried until two-dimensional.
inline dimercmg::ConvexIntegralPolygon random_polygon(std::int64_t box, std::size_t npoints = 6) {
    while (true) {
        std::vector<dimercmg::LatticeVector> pts;
        for (std::size_t i = 0; i < npoints; ++i) pts.push_back({uniform(-box, box), uniform(-box, box)});
        if (auto h = dimercmg::convex_hull(pts)) return *h;
    }
}

// Positive rationals p/q with small numerators and denominators.
inline dimercmg::EdgeWeights random_weights(const dimercmg::TorusGraph& g, std::int64_t bound = 7) {
    dimercmg::EdgeWeights w;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        dimercmg::Rational q(static_cast<long>(uniform(1, bound)), static_cast<unsigned long>(uniform(1, bound)));
        q.canonicalize();
        w[g.edge_id(e)] = q;
    }
    return w;
}

}  // namespace testgen

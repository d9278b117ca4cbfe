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

// Minimality via exact intersection bookkeeping of zig-zag lifts.

#include <algorithm>
#include <map>

#include "dimercmg/torus_graph.hpp"

namespace dimercmg {

namespace {

struct Pass {
    std::size_t step;      // index along the zig-zag
    LatticeVector black;   // lift of the edge's black endpoint, path started at the origin
};

// Every traversal of each edge by a zig-zag path, keyed by edge.
std::vector<std::map<std::size_t, std::vector<Pass>>> passes_by_edge(const TorusGraph& g) {
    std::vector<std::map<std::size_t, std::vector<Pass>>> out(g.zigzags().size());
    for (std::size_t z = 0; z < g.zigzags().size(); ++z) {
        LatticeVector pos;
        const auto& darts = g.zigzags()[z].darts;
        for (std::size_t i = 0; i < darts.size(); ++i) {
            const auto d = darts[i];
            const auto black = d % 2 ? pos + g.dart_disp(d) : pos;
            out[z][TorusGraph::edge_of(d)].push_back({i, black});
            pos += g.dart_disp(d);
        }
    }
    return out;
}

std::string describe(std::size_t z1, std::size_t z2, std::size_t e, const TorusGraph& g) {
    return "zig-zag paths " + std::to_string(z1) + " and " + std::to_string(z2) + " form a parallel bigon through edge " +
           std::to_string(g.edge_id(e));
}

}  // namespace

MinimalityReport check_minimality(const TorusGraph& g) {
    const auto& zs = g.zigzags();
    for (std::size_t z = 0; z < zs.size(); ++z)
        if (zs[z].homology_class == LatticeVector{0, 0})
            return {false, "zig-zag path " + std::to_string(z) + " is homologically trivial"};

    // A path using an edge twice meets itself or one of its own translates.
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (g.zigzag_of_dart(2 * e) == g.zigzag_of_dart(2 * e + 1))
            return {false, "zig-zag path " + std::to_string(g.zigzag_of_dart(2 * e)) + " self-intersects at edge " +
                               std::to_string(g.edge_id(e))};

    const auto passes = passes_by_edge(g);
    for (std::size_t z1 = 0; z1 < zs.size(); ++z1) {
        for (std::size_t z2 = z1 + 1; z2 < zs.size(); ++z2) {
            const auto c1 = zs[z1].homology_class, c2 = zs[z2].homology_class;
            const auto len1 = static_cast<std::int64_t>(zs[z1].darts.size());
            const auto len2 = static_cast<std::int64_t>(zs[z2].darts.size());
            struct Hit {
                std::size_t edge;
                LatticeVector offset;  // black lift on z1 minus black lift on z2
                std::int64_t t1, t2;
            };
            std::vector<Hit> hits;
            for (const auto& [e, p1] : passes[z1]) {
                auto it = passes[z2].find(e);
                if (it == passes[z2].end()) continue;
                for (const auto& a : p1)
                    for (const auto& b : it->second)
                        hits.push_back({e, a.black - b.black, static_cast<std::int64_t>(a.step), static_cast<std::int64_t>(b.step)});
            }
            if (hits.empty()) continue;

            const auto det = pairing(c1, c2);
            if (det == 0) {
                // Parallel classes: lifts that meet once meet periodically.
                if (dot(c1, c2) > 0) return {false, describe(z1, z2, hits.front().edge, g)};
                continue;
            }
            // Lift pairs are indexed by the offset modulo Z c1 + Z c2. Within the pair
            // containing hit h, hit h' sits at k1 periods along z1 and k2 along z2, where
            // k1 c1 - k2 c2 = offset(h) - offset(h').
            std::vector<bool> used(hits.size(), false);
            for (std::size_t h = 0; h < hits.size(); ++h) {
                if (used[h]) continue;
                std::vector<std::pair<std::int64_t, std::int64_t>> params;
                for (std::size_t k = h; k < hits.size(); ++k) {
                    const auto delta = hits[h].offset - hits[k].offset;
                    // Cramer: k1 = <delta, -c2>/<c1, -c2>, k2 from the other column.
                    const auto n1 = pairing(delta, -1 * c2), n2 = pairing(c1, delta);
                    const auto dd = pairing(c1, -1 * c2);
                    if (n1 % dd != 0 || n2 % dd != 0) continue;
                    used[k] = true;
                    params.emplace_back(hits[k].t1 + (n1 / dd) * len1, hits[k].t2 + (n2 / dd) * len2);
                }
                std::sort(params.begin(), params.end());
                for (std::size_t i = 0; i + 1 < params.size(); ++i)
                    if (params[i + 1].second > params[i].second) return {false, describe(z1, z2, hits[h].edge, g)};
            }
        }
    }
    return {};
}

}  // namespace dimercmg

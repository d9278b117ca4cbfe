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

#include "dimercmg/torus_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "dimercmg/error.hpp"

namespace dimercmg {

std::size_t TorusGraph::vertex_index(std::int64_t id) const {
    auto v = find_vertex(id);
    if (!v) throw Error(ErrorCode::InvalidGraph, "unknown vertex id " + std::to_string(id));
    return *v;
}

std::size_t TorusGraph::edge_index(std::int64_t id) const {
    auto e = find_edge(id);
    if (!e) throw Error(ErrorCode::InvalidGraph, "unknown edge id " + std::to_string(id));
    return *e;
}

std::optional<std::size_t> TorusGraph::find_vertex(std::int64_t id) const {
    auto it = vindex_.find(id);
    if (it == vindex_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> TorusGraph::find_edge(std::int64_t id) const {
    auto it = eindex_.find(id);
    if (it == eindex_.end()) return std::nullopt;
    return it->second;
}

std::size_t TorusGraph::next_vertex_id() const {
    return vindex_.empty() ? 0 : static_cast<std::size_t>(vindex_.rbegin()->first + 1);
}

std::size_t TorusGraph::next_edge_id() const {
    return eindex_.empty() ? 0 : static_cast<std::size_t>(eindex_.rbegin()->first + 1);
}

std::size_t TorusGraph::face_next(std::size_t d) const {
    const std::size_t v = head(d);
    const auto& rot = rotation_[v];
    const std::size_t i = rot_pos_[reverse(d)];
    return dart_from(v, rot[(i + rot.size() - 1) % rot.size()]);
}

std::size_t TorusGraph::zigzag_next(std::size_t d) const {
    // Maximally right at black (next counterclockwise from the arrival edge),
    // maximally left at white (next clockwise).
    const std::size_t v = head(d);
    const auto& rot = rotation_[v];
    const std::size_t i = rot_pos_[reverse(d)];
    const std::size_t k = color(v) == Color::Black ? i + 1 : i + rot.size() - 1;
    return dart_from(v, rot[k % rot.size()]);
}

namespace {

template <class Next>
std::vector<std::vector<std::size_t>> orbits(std::size_t darts, Next next, std::vector<std::size_t>& owner) {
    std::vector<std::vector<std::size_t>> out;
    owner.assign(darts, darts);
    for (std::size_t d = 0; d < darts; ++d) {
        if (owner[d] != darts) continue;
        std::vector<std::size_t> cyc;
        for (std::size_t x = d; owner[x] == darts; x = next(x)) {
            owner[x] = out.size();
            cyc.push_back(x);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

}  // namespace

TorusGraph validate_graph(RawGraph raw) {
    TorusGraph g;
    for (std::size_t i = 0; i < raw.vertices.size(); ++i)
        if (!g.vindex_.emplace(raw.vertices[i].id, i).second)
            throw Error(ErrorCode::InvalidGraph, "duplicate vertex id " + std::to_string(raw.vertices[i].id));
    for (std::size_t i = 0; i < raw.edges.size(); ++i) {
        const auto& e = raw.edges[i];
        if (!g.eindex_.emplace(e.id, i).second)
            throw Error(ErrorCode::InvalidGraph, "duplicate edge id " + std::to_string(e.id));
        auto b = g.vindex_.find(e.black), w = g.vindex_.find(e.white);
        if (b == g.vindex_.end() || w == g.vindex_.end())
            throw Error(ErrorCode::InvalidGraph, "edge " + std::to_string(e.id) + " has an unknown endpoint");
        if (raw.vertices[b->second].color != Color::Black || raw.vertices[w->second].color != Color::White)
            throw Error(ErrorCode::NotBipartite, "edge " + std::to_string(e.id) + " does not join black to white");
        g.black_.push_back(b->second);
        g.white_.push_back(w->second);
    }

    const std::size_t V = raw.vertices.size(), E = raw.edges.size();
    if (V == 0 || E == 0) throw Error(ErrorCode::InvalidGraph, "empty graph");
    g.rotation_.assign(V, {});
    g.rot_pos_.assign(2 * E, 2 * E);
    for (std::size_t v = 0; v < V; ++v) {
        auto it = raw.rotations.find(raw.vertices[v].id);
        if (it == raw.rotations.end()) continue;
        for (auto eid : it->second) {
            auto e = g.eindex_.find(eid);
            if (e == g.eindex_.end())
                throw Error(ErrorCode::InvalidGraph, "rotation lists unknown edge " + std::to_string(eid));
            if (g.black_[e->second] != v && g.white_[e->second] != v)
                throw Error(ErrorCode::InvalidGraph, "rotation lists edge " + std::to_string(eid) + " not incident to vertex");
            const std::size_t d = g.black_[e->second] == v ? 2 * e->second : 2 * e->second + 1;
            if (g.rot_pos_[d] != 2 * E)
                throw Error(ErrorCode::InvalidGraph, "edge " + std::to_string(eid) + " repeated in a rotation");
            g.rot_pos_[d] = g.rotation_[v].size();
            g.rotation_[v].push_back(e->second);
        }
    }
    for (std::size_t d = 0; d < 2 * E; ++d)
        if (g.rot_pos_[d] == 2 * E)
            throw Error(ErrorCode::InvalidGraph, "edge " + std::to_string(raw.edges[d / 2].id) + " missing from a rotation");

    // Connectivity.
    std::vector<bool> seen(V, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto e : g.rotation_[v]) {
            auto u = g.black_[e] == v ? g.white_[e] : g.black_[e];
            if (!seen[u]) seen[u] = true, queue.push_back(u);
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw Error(ErrorCode::Disconnected, "graph is not connected");

    g.raw_ = std::move(raw);

    for (auto& cyc : orbits(2 * E, [&](std::size_t d) { return g.face_next(d); }, g.face_of_dart_)) {
        LatticeVector s;
        for (auto d : cyc) s += g.dart_disp(d);
        if (s != LatticeVector{0, 0})
            throw Error(ErrorCode::NonContractibleFace, "face boundary has homology class (" + std::to_string(s.x) +
                                                            "," + std::to_string(s.y) + ")");
        g.faces_.push_back({std::move(cyc)});
    }
    if (V + g.faces_.size() != E)
        throw Error(ErrorCode::EulerMismatch, "V - E + F = " +
                                                  std::to_string(static_cast<std::int64_t>(V + g.faces_.size()) -
                                                                 static_cast<std::int64_t>(E)));

    for (auto& cyc : orbits(2 * E, [&](std::size_t d) { return g.zigzag_next(d); }, g.zigzag_of_dart_)) {
        ZigZagPath z;
        for (auto d : cyc) z.homology_class += g.dart_disp(d);
        z.darts = std::move(cyc);
        g.zigzags_.push_back(std::move(z));
    }
    return g;
}

std::vector<ZigZagPath> zig_zag_paths(const TorusGraph& g) {
    auto paths = g.zigzags();
    bool trivial = false;
    for (const auto& z : paths) trivial |= z.homology_class == LatticeVector{0, 0};
    if (trivial) return paths;
    const auto n = newton_polygon(g);
    const auto labels = zigzag_edge_labels(g, n);
    for (std::size_t i = 0; i < paths.size(); ++i) paths[i].edge_label = labels[i];
    return paths;
}

namespace {

bool angle_less(LatticeVector a, LatticeVector b) {
    auto half = [](LatticeVector v) { return v.y < 0 || (v.y == 0 && v.x < 0) ? 1 : 0; };
    if (half(a) != half(b)) return half(a) < half(b);
    return pairing(a, b) > 0;
}

}  // namespace

ConvexIntegralPolygon newton_polygon(const TorusGraph& g) {
    std::vector<LatticeVector> classes;
    for (const auto& z : g.zigzags()) {
        if (z.homology_class == LatticeVector{0, 0})
            throw Error(ErrorCode::TrivialZigZag, "zig-zag path with trivial homology class");
        classes.push_back(z.homology_class);
    }
    std::stable_sort(classes.begin(), classes.end(), angle_less);
    return translated_to_origin(polygon_from_edges(classes));
}

std::vector<std::size_t> zigzag_edge_labels(const TorusGraph& g, const ConvexIntegralPolygon& newton) {
    const auto edges = edge_data(newton);
    std::vector<std::size_t> labels;
    for (const auto& z : g.zigzags()) {
        const auto c = z.homology_class;
        const auto k = gcd_abs(c.x, c.y);
        if (k == 0) throw Error(ErrorCode::TrivialZigZag, "zig-zag path with trivial homology class");
        const LatticeVector dir{c.x / k, c.y / k};
        auto it = std::find_if(edges.begin(), edges.end(), [&](const EdgeDatum& e) { return e.primitive_direction == dir; });
        if (it == edges.end()) throw Error(ErrorCode::InvalidInput, "zig-zag class is not parallel to any polygon edge");
        labels.push_back(it->index);
    }
    return labels;
}

Seed seed_of(const TorusGraph& g) {
    Seed s;
    const std::size_t F = g.faces().size();
    s.epsilon = IntMatrix(F, F);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        // Crossing e from white to black: left face is that of dart w->b.
        const auto left = g.face_of_dart(2 * e + 1), right = g.face_of_dart(2 * e);
        if (left == right) continue;
        s.epsilon(left, right) += 1;
        s.epsilon(right, left) -= 1;
    }
    for (const auto& f : g.faces()) {
        std::vector<std::int64_t> cyc;
        for (auto d : f.darts) {
            const auto e = static_cast<std::int64_t>(TorusGraph::edge_of(d));
            cyc.push_back(d % 2 ? e : -(e + 1));
        }
        s.face_cycles.push_back(std::move(cyc));
    }
    return s;
}

Rational dart_weight(const TorusGraph& g, const EdgeWeights& w, std::size_t d) {
    auto it = w.find(g.edge_id(TorusGraph::edge_of(d)));
    if (it == w.end()) throw Error(ErrorCode::InvalidInput, "missing weight for edge " + std::to_string(g.edge_id(d / 2)));
    if (it->second == 0) throw Error(ErrorCode::InvalidInput, "zero weight on edge " + std::to_string(it->first));
    return d % 2 ? it->second : Rational(1) / it->second;
}

Rational product_along(const TorusGraph& g, const EdgeWeights& w, const std::vector<std::size_t>& darts) {
    Rational p = 1;
    for (auto d : darts) p *= dart_weight(g, w, d);
    return p;
}

std::array<std::vector<std::size_t>, 2> homology_basis_cycles(const TorusGraph& g) {
    const std::size_t V = g.vertex_count();
    std::vector<LatticeVector> pos(V);
    std::vector<std::size_t> parent_dart(V, g.dart_count());
    std::vector<bool> seen(V, false), tree_edge(g.edge_count(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto e : g.rotation(v)) {
            const auto d = g.dart_from(v, e);
            const auto u = g.head(d);
            if (seen[u]) continue;
            seen[u] = true;
            tree_edge[e] = true;
            parent_dart[u] = d;
            pos[u] = pos[v] + g.dart_disp(d);
            queue.push_back(u);
        }
    }
    auto path_from_root = [&](std::size_t v) {
        std::vector<std::size_t> p;
        while (parent_dart[v] != g.dart_count()) {
            p.push_back(parent_dart[v]);
            v = g.tail(parent_dart[v]);
        }
        std::reverse(p.begin(), p.end());
        return p;
    };
    std::vector<std::vector<std::size_t>> cycles;
    std::vector<IntVector> classes;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (tree_edge[e]) continue;
        const auto c = pos[g.black(e)] + g.disp(e) - pos[g.white(e)];
        if (c == LatticeVector{0, 0}) continue;
        auto cyc = path_from_root(g.black(e));
        cyc.push_back(2 * e);
        for (auto d : [&] { auto p = path_from_root(g.white(e)); std::reverse(p.begin(), p.end()); return p; }())
            cyc.push_back(TorusGraph::reverse(d));
        cycles.push_back(std::move(cyc));
        classes.push_back({static_cast<long>(c.x), static_cast<long>(c.y)});
    }
    const IntMatrix A = IntMatrix::from_columns(classes, 2);
    std::array<std::vector<std::size_t>, 2> out;
    for (std::size_t k = 0; k < 2; ++k) {
        IntVector target{k == 0 ? 1 : 0, k == 1 ? 1 : 0};
        auto coeff = solve_integer(A, target);
        if (!coeff) throw Error(ErrorCode::InvalidGraph, "graph cycles do not generate H_1 of the torus");
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            const auto m = (*coeff)[i];
            for (Int r = 0; r < abs(m); ++r) {
                if (m > 0) {
                    out[k].insert(out[k].end(), cycles[i].begin(), cycles[i].end());
                } else {
                    for (auto it = cycles[i].rbegin(); it != cycles[i].rend(); ++it) out[k].push_back(TorusGraph::reverse(*it));
                }
            }
        }
    }
    return out;
}

FaceVariables face_variables(const TorusGraph& g, const EdgeWeights& w) {
    FaceVariables fv;
    Rational total = 1;
    for (const auto& f : g.faces()) {
        fv.faces.push_back(product_along(g, w, f.darts));
        total *= fv.faces.back();
    }
    if (total != 1) throw std::logic_error("product of face variables is not 1");
    const auto cycles = homology_basis_cycles(g);
    fv.monodromy_x = product_along(g, w, cycles[0]);
    fv.monodromy_y = product_along(g, w, cycles[1]);
    return fv;
}

std::vector<Rational> zigzag_monodromies(const TorusGraph& g, const EdgeWeights& w) {
    std::vector<Rational> out;
    for (const auto& z : g.zigzags()) out.push_back(product_along(g, w, z.darts));
    return out;
}

EdgeWeights unit_weights(const TorusGraph& g) {
    EdgeWeights w;
    for (const auto& e : g.raw().edges) w[e.id] = 1;
    return w;
}

}  // namespace dimercmg

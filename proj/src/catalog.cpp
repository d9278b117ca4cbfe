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

// Bundled minimal graphs, built from a straight-line embedding of one period.

#include <algorithm>
#include <cmath>
#include <string>

#include "dimercmg/error.hpp"
#include "dimercmg/torus_graph.hpp"

namespace dimercmg {

namespace {

struct Placed {
    Color color;
    double x, y;  // position in the unit square
};

struct PlacedEdge {
    std::size_t black, white;
    LatticeVector disp;
};

// Rotations come from the angles of the edges at each vertex.
RawGraph from_embedding(const std::vector<Placed>& verts, const std::vector<PlacedEdge>& edges) {
    RawGraph raw;
    for (std::size_t i = 0; i < verts.size(); ++i) raw.vertices.push_back({static_cast<std::int64_t>(i), verts[i].color});
    std::vector<std::vector<std::pair<double, std::int64_t>>> around(verts.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& pe = edges[e];
        raw.edges.push_back({static_cast<std::int64_t>(e), static_cast<std::int64_t>(pe.black),
                             static_cast<std::int64_t>(pe.white), pe.disp});
        const auto& b = verts[pe.black];
        const auto& w = verts[pe.white];
        const double dx = w.x + static_cast<double>(pe.disp.x) - b.x;
        const double dy = w.y + static_cast<double>(pe.disp.y) - b.y;
        around[pe.black].emplace_back(std::atan2(dy, dx), static_cast<std::int64_t>(e));
        around[pe.white].emplace_back(std::atan2(-dy, -dx), static_cast<std::int64_t>(e));
    }
    for (std::size_t v = 0; v < verts.size(); ++v) {
        std::sort(around[v].begin(), around[v].end());
        auto& rot = raw.rotations[static_cast<std::int64_t>(v)];
        for (const auto& [angle, e] : around[v]) rot.push_back(e);
    }
    return raw;
}

// Square grid with an (2k x 2k) period; (i + j) even is black.
RawGraph square_lattice_raw(std::int64_t k) {
    const std::int64_t n = 2 * k;
    std::vector<Placed> verts;
    auto index = [n](std::int64_t i, std::int64_t j) { return static_cast<std::size_t>(((j % n + n) % n) * n + (i % n + n) % n); };
    for (std::int64_t j = 0; j < n; ++j)
        for (std::int64_t i = 0; i < n; ++i)
            verts.push_back({(i + j) % 2 == 0 ? Color::Black : Color::White, double(i) / double(n), double(j) / double(n)});
    std::vector<PlacedEdge> edges;
    for (std::int64_t j = 0; j < n; ++j)
        for (std::int64_t i = 0; i < n; ++i)
            for (auto [di, dj] : {std::pair{1, 0}, std::pair{0, 1}}) {
                const std::int64_t i2 = i + di, j2 = j + dj;
                // Wrap count of the neighbour relative to its representative.
                const LatticeVector wrap{i2 / n, j2 / n};
                if ((i + j) % 2 == 0) edges.push_back({index(i, j), index(i2, j2), wrap});
                else edges.push_back({index(i2, j2), index(i, j), -wrap});
            }
    return from_embedding(verts, edges);
}

// Hexagonal lattice with a k x k period: b_ij joined to w_ij, w_{i-1,j}, w_{i,j-1}.
RawGraph honeycomb_raw(std::int64_t k) {
    std::vector<Placed> verts;
    auto b = [k](std::int64_t i, std::int64_t j) { return static_cast<std::size_t>(2 * (j * k + i)); };
    auto w = [k](std::int64_t i, std::int64_t j) {
        return static_cast<std::size_t>(2 * (((j + k) % k) * k + (i + k) % k) + 1);
    };
    const double s = 1.0 / double(k);
    for (std::int64_t j = 0; j < k; ++j)
        for (std::int64_t i = 0; i < k; ++i) {
            verts.push_back({Color::Black, double(i) * s, double(j) * s});
            verts.push_back({Color::White, (double(i) + 1.0 / 3) * s, (double(j) + 1.0 / 3) * s});
        }
    std::vector<PlacedEdge> edges;
    for (std::int64_t j = 0; j < k; ++j)
        for (std::int64_t i = 0; i < k; ++i) {
            edges.push_back({b(i, j), w(i, j), {0, 0}});
            edges.push_back({b(i, j), w(i - 1, j), {i == 0 ? -1 : 0, 0}});
            edges.push_back({b(i, j), w(i, j - 1), {0, j == 0 ? -1 : 0}});
        }
    return from_embedding(verts, edges);
}

std::optional<std::int64_t> suffix_number(const std::string& name, const std::string& prefix) {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
    const auto tail = name.substr(prefix.size());
    if (!std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; }) || tail.size() > 2)
        return std::nullopt;
    const auto k = std::stoll(tail);
    if (k < 1 || k > 6) return std::nullopt;
    return k;
}

ConvexIntegralPolygon scaled(std::vector<LatticeVector> v, std::int64_t k) {
    for (auto& p : v) p = k * p;
    return translated_to_origin(validate_polygon(v));
}

}  // namespace

CatalogEntry catalog(const std::string& name) {
    std::int64_t k = 0;
    if (name == "square_lattice") k = 1;
    else if (auto n = suffix_number(name, "square_lattice_")) k = *n;
    if (k > 0) {
        auto diamond = scaled({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, k);
        return {name, validate_graph(square_lattice_raw(k)), diamond, interior_lattice_points(diamond).count};
    }
    if (name == "honeycomb") k = 1;
    else if (auto n = suffix_number(name, "honeycomb_")) k = *n;
    if (k > 0) {
        auto tri = scaled({{0, 0}, {1, -1}, {1, 0}}, k);
        return {name, validate_graph(honeycomb_raw(k)), tri, interior_lattice_points(tri).count};
    }
    throw Error(ErrorCode::UnknownCatalogEntry, "no catalog graph named '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"square_lattice", "square_lattice_2", "honeycomb", "honeycomb_2", "honeycomb_3"};
}

}  // namespace dimercmg

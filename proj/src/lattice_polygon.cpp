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

#include "dimercmg/lattice_polygon.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dimercmg/error.hpp"

namespace dimercmg {

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

namespace {

std::vector<LatticeVector> rotate_to_lexmin(std::vector<LatticeVector> v) {
    auto it = std::min_element(v.begin(), v.end());
    std::rotate(v.begin(), it, v.end());
    return v;
}

std::int64_t twice_signed_area(std::span<const LatticeVector> v) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += pairing(v[i], v[(i + 1) % v.size()]);
    return s;
}

// q lies on the closed segment [a,b].
bool on_segment(LatticeVector a, LatticeVector b, LatticeVector q) {
    if (pairing(b - a, q - a) != 0) return false;
    return dot(q - a, b - a) >= 0 && dot(q - b, a - b) >= 0;
}

std::int64_t lattice_count(const ConvexIntegralPolygon& p) {
    return interior_lattice_points(p).count + boundary_lattice_count(p);
}

}  // namespace

ConvexIntegralPolygon validate_polygon(std::span<const LatticeVector> input, StartPolicy policy) {
    std::vector<LatticeVector> v(input.begin(), input.end());
    if (v.size() >= 2 && v.front() == v.back()) v.pop_back();
    if (v.size() < 3) throw Error(ErrorCode::Degenerate, "a polygon needs at least three vertices");
    {
        std::set<LatticeVector> seen(v.begin(), v.end());
        if (seen.size() != v.size()) throw Error(ErrorCode::RepeatedVertex, "vertex listed twice");
    }
    const std::int64_t area = twice_signed_area(v);
    if (area == 0) throw Error(ErrorCode::Degenerate, "polygon has zero area");
    if (area < 0) {
        // Keep the caller's first vertex first when reversing.
        std::reverse(v.begin() + 1, v.end());
    }

    // Drop middle vertices of straight runs; a reversal (spike) is not convex.
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto prev = v[(i + v.size() - 1) % v.size()];
            const auto next = v[(i + 1) % v.size()];
            const auto a = v[i] - prev;
            const auto b = next - v[i];
            const auto c = pairing(a, b);
            if (c < 0) throw Error(ErrorCode::NotConvex, "reflex vertex");
            if (c == 0) {
                if (dot(a, b) <= 0) throw Error(ErrorCode::NotConvex, "boundary doubles back");
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (v.size() < 3) throw Error(ErrorCode::Degenerate, "polygon collapsed to a segment");

    // Left turns everywhere still admits star polygons; compare against the hull.
    auto hull = convex_hull(v);
    if (!hull || hull->size() != v.size() || rotate_to_lexmin(v) != rotate_to_lexmin({hull->vertices().begin(), hull->vertices().end()}))
        throw Error(ErrorCode::NotConvex, "vertex sequence winds more than once");

    ConvexIntegralPolygon p;
    p.vertices_ = policy == StartPolicy::LexicographicMin ? rotate_to_lexmin(std::move(v)) : std::move(v);
    return p;
}

ConvexIntegralPolygon polygon_from_edges(std::span<const LatticeVector> edges, LatticeVector origin,
                                         StartPolicy policy) {
    LatticeVector sum;
    for (auto e : edges) sum += e;
    if (sum != LatticeVector{0, 0}) throw Error(ErrorCode::NotClosed, "edge vectors do not sum to zero");
    std::vector<LatticeVector> verts;
    LatticeVector cur = origin;
    for (auto e : edges) {
        verts.push_back(cur);
        cur += e;
    }
    return validate_polygon(verts, policy);
}

std::optional<ConvexIntegralPolygon> convex_hull(std::span<const LatticeVector> points) {
    std::vector<LatticeVector> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return std::nullopt;
    std::vector<LatticeVector> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && pairing(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && pairing(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) return std::nullopt;
    // Monotone chain already yields a strictly convex ccw loop starting at the lexmin point.
    ConvexIntegralPolygon p;
    p.vertices_ = std::move(hull);
    return p;
}

std::vector<EdgeDatum> edge_data(const ConvexIntegralPolygon& p) {
    std::vector<EdgeDatum> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        EdgeDatum d;
        d.index = i;
        d.edge_vector = p.edge_vector(i);
        d.multiplicity = gcd_abs(d.edge_vector.x, d.edge_vector.y);
        d.primitive_direction = {d.edge_vector.x / d.multiplicity, d.edge_vector.y / d.multiplicity};
        // Interior lies to the left of a ccw edge.
        d.inward_normal = {-d.primitive_direction.y, d.primitive_direction.x};
        out.push_back(d);
    }
    return out;
}

std::int64_t twice_area(const ConvexIntegralPolygon& p) { return twice_signed_area(p.vertices()); }

std::int64_t boundary_lattice_count(const ConvexIntegralPolygon& p) {
    std::int64_t b = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto e = p.edge_vector(i);
        b += gcd_abs(e.x, e.y);
    }
    return b;
}

bool strictly_contains(const ConvexIntegralPolygon& p, LatticeVector q) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (pairing(p.edge_vector(i), q - p.vertex(i)) <= 0) return false;
    return true;
}

bool contains(const ConvexIntegralPolygon& p, LatticeVector q) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (pairing(p.edge_vector(i), q - p.vertex(i)) < 0) return false;
    return true;
}

bool contains(const ConvexIntegralPolygon& outer, const ConvexIntegralPolygon& inner) {
    return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                       [&](LatticeVector v) { return contains(outer, v); });
}

namespace {
template <class Pred>
std::vector<LatticeVector> scan_box(const ConvexIntegralPolygon& p, Pred pred) {
    auto [xmin, xmax] = std::minmax_element(p.vertices().begin(), p.vertices().end(),
                                            [](auto a, auto b) { return a.x < b.x; });
    auto [ymin, ymax] = std::minmax_element(p.vertices().begin(), p.vertices().end(),
                                            [](auto a, auto b) { return a.y < b.y; });
    std::vector<LatticeVector> out;
    for (auto x = xmin->x; x <= xmax->x; ++x)
        for (auto y = ymin->y; y <= ymax->y; ++y)
            if (pred(LatticeVector{x, y})) out.push_back({x, y});
    return out;
}
}  // namespace

InteriorPoints interior_lattice_points(const ConvexIntegralPolygon& p) {
    InteriorPoints r;
    r.points = scan_box(p, [&](LatticeVector q) { return strictly_contains(p, q); });
    r.count = static_cast<std::int64_t>(r.points.size());
    // Pick: 2A = 2I + B - 2.
    if (twice_area(p) != 2 * r.count + boundary_lattice_count(p) - 2)
        throw std::logic_error("Pick's theorem violated; lattice enumeration is broken");
    return r;
}

std::vector<LatticeVector> lattice_points(const ConvexIntegralPolygon& p) {
    return scan_box(p, [&](LatticeVector q) { return contains(p, q); });
}

ConvexIntegralPolygon translated_to_origin(const ConvexIntegralPolygon& p) {
    const auto low = *std::min_element(p.vertices().begin(), p.vertices().end());
    std::vector<LatticeVector> v;
    for (auto q : p.vertices()) v.push_back(q - low);
    return validate_polygon(v);
}

bool translation_equivalent(const ConvexIntegralPolygon& a, const ConvexIntegralPolygon& b) {
    return translated_to_origin(a) == translated_to_origin(b);
}

ConvexIntegralPolygon apply_sl2(const ConvexIntegralPolygon& p, const Mat2& m) {
    if (m[0][0] * m[1][1] - m[0][1] * m[1][0] != 1)
        throw Error(ErrorCode::NotUnimodular, "matrix determinant is not 1");
    std::vector<LatticeVector> v;
    for (auto q : p.vertices()) v.push_back(apply(m, q));
    return validate_polygon(v);
}

bool is_building_block(const ConvexIntegralPolygon& p) {
    const auto interior = interior_lattice_points(p).count;
    return interior == 1 && interior + boundary_lattice_count(p) <= 5;
}

namespace {

// Lattice points on the boundary that are not vertices, ordered by edge and
// then along the edge.
std::vector<std::pair<std::size_t, LatticeVector>> boundary_non_vertices(const ConvexIntegralPolygon& q) {
    std::vector<std::pair<std::size_t, LatticeVector>> out;
    for (std::size_t i = 0; i < q.size(); ++i) {
        auto e = q.edge_vector(i);
        auto m = gcd_abs(e.x, e.y);
        LatticeVector step{e.x / m, e.y / m};
        for (std::int64_t k = 1; k < m; ++k) out.emplace_back(i, q.vertex(i) + k * step);
    }
    return out;
}

std::vector<std::vector<LatticeVector>> shrink_candidates(const ConvexIntegralPolygon& q) {
    const std::size_t n = q.size();
    auto v = [&](std::size_t i) { return q.vertex(i); };
    std::vector<std::vector<LatticeVector>> pieces;

    if (n > 4) {
        // Two chords a1a3 and a3a5 split off two triangles.
        pieces.push_back({v(0), v(1), v(2)});
        pieces.push_back({v(2), v(3), v(4)});
        std::vector<LatticeVector> rest{v(0), v(2)};
        for (std::size_t i = 4; i < n; ++i) rest.push_back(v(i));
        pieces.push_back(rest);
        return pieces;
    }

    const auto interior = interior_lattice_points(q);
    if (interior.count >= 2) {
        const LatticeVector x = interior.points[0];
        const LatticeVector y = interior.points[1];
        if (n == 3) {
            // Follow the line xy out through an open edge; the far point and that
            // edge span a triangle with the near point inside it.
            for (auto [from, near] : {std::pair{y, x}, std::pair{x, y}}) {
                const auto dir = near - from;
                for (std::size_t i = 0; i < 3; ++i) {
                    const auto a = v(i), b = v(i + 1);
                    const auto sa = pairing(dir, a - from), sb = pairing(dir, b - from);
                    if (!((sa > 0 && sb < 0) || (sa < 0 && sb > 0))) continue;
                    // Ray parameter t of the crossing, sign only.
                    const auto num = pairing(a - from, b - a);
                    const auto den = pairing(dir, b - a);
                    if ((num > 0) != (den > 0)) continue;
                    pieces.push_back({from, a, b});
                }
            }
        } else {
            for (std::size_t d = 0; d < 2; ++d) {
                const auto a = v(d), c = v(d + 2);
                if (on_segment(a, c, x) && on_segment(a, c, y)) continue;
                pieces.push_back({a, v(d + 1), c});
                pieces.push_back({c, v(d + 3), a});
            }
        }
        return pieces;
    }

    const auto extra = boundary_non_vertices(q);
    if (extra.empty()) return pieces;
    if (n == 4) {
        const auto [i, y] = extra.front();
        pieces.push_back({y, v(i + 1), v(i + 2)});
        pieces.push_back({y, v(i + 2), v(i + 3)});
        pieces.push_back({y, v(i + 3), v(i)});
        return pieces;
    }
    // Triangle.
    const auto [i, p] = extra.front();
    const LatticeVector a = v(i + 2);
    if (extra.size() >= 2 && extra[1].first == i) {
        const LatticeVector r = extra[1].second;
        pieces.push_back({v(i), p, a});
        pieces.push_back({p, r, a});
        pieces.push_back({r, v(i + 1), a});
    } else {
        pieces.push_back({v(i), p, a});
        pieces.push_back({p, v(i + 1), a});
    }
    return pieces;
}

ConvexIntegralPolygon shrink_once(const ConvexIntegralPolygon& q) {
    const auto count = lattice_count(q);
    for (const auto& piece : shrink_candidates(q)) {
        auto hull = convex_hull(piece);
        if (!hull) continue;
        if (interior_lattice_points(*hull).count >= 1 && lattice_count(*hull) < count) return *hull;
    }
    // A cut can pass through the interior point itself; peel a vertex instead.
    // Any smaller subpolygon with an interior point misses some vertex, so this
    // always succeeds when q is not minimal.
    const auto pts = lattice_points(q);
    std::vector<LatticeVector> verts(q.vertices().begin(), q.vertices().end());
    std::sort(verts.begin(), verts.end());
    for (auto vert : verts) {
        std::vector<LatticeVector> rest;
        for (auto pt : pts)
            if (pt != vert) rest.push_back(pt);
        auto hull = convex_hull(rest);
        if (hull && interior_lattice_points(*hull).count >= 1) return *hull;
    }
    throw std::logic_error("no smaller subpolygon with an interior point");
}

}  // namespace

ConvexIntegralPolygon find_building_block(const ConvexIntegralPolygon& p) {
    if (interior_lattice_points(p).count == 0)
        throw Error(ErrorCode::NoInteriorPoint, "polygon has no interior lattice point");
    ConvexIntegralPolygon q = p;
    while (!is_building_block(q)) q = shrink_once(q);
    return q;
}

}  // namespace dimercmg

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
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dimercmg {

/// Integer vector in H_1(T, Z) or in the plane lattice of a Newton polygon.
struct LatticeVector {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr LatticeVector operator+(LatticeVector a, LatticeVector b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr LatticeVector operator-(LatticeVector a, LatticeVector b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr LatticeVector operator-(LatticeVector a) { return {-a.x, -a.y}; }
    friend constexpr LatticeVector operator*(std::int64_t k, LatticeVector a) { return {k * a.x, k * a.y}; }
    LatticeVector& operator+=(LatticeVector o) { x += o.x; y += o.y; return *this; }
    LatticeVector& operator-=(LatticeVector o) { x -= o.x; y -= o.y; return *this; }
    friend constexpr auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

/// Intersection pairing <a,b> = a.x*b.y - a.y*b.x. This orientation is used
/// everywhere in the library.
constexpr std::int64_t pairing(LatticeVector a, LatticeVector b) { return a.x * b.y - a.y * b.x; }
constexpr std::int64_t dot(LatticeVector a, LatticeVector b) { return a.x * b.x + a.y * b.y; }

std::int64_t gcd_abs(std::int64_t a, std::int64_t b);

/// Row-major 2x2 integer matrix acting on column vectors.
using Mat2 = std::array<std::array<std::int64_t, 2>, 2>;

inline LatticeVector apply(const Mat2& m, LatticeVector v) {
    return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
}

enum class StartPolicy {
    LexicographicMin,  // rotate so the lexicographically smallest vertex comes first
    AsGiven,           // keep the caller's first vertex (after orientation fix-up)
};

class ConvexIntegralPolygon;
std::optional<ConvexIntegralPolygon> convex_hull(std::span<const LatticeVector> points);

/// Accepts either orientation (clockwise input is reversed), drops a repeated
/// closing vertex and collinear middle vertices.
/// Throws Error{NotConvex, RepeatedVertex, Degenerate}.
ConvexIntegralPolygon validate_polygon(std::span<const LatticeVector> vertices,
                                       StartPolicy policy = StartPolicy::LexicographicMin);

/// A strictly convex lattice polygon with vertices in counterclockwise order.
/// Construct through validate_polygon / polygon_from_edges / convex_hull.
class ConvexIntegralPolygon {
public:
    std::span<const LatticeVector> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const LatticeVector& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
    LatticeVector edge_vector(std::size_t i) const { return vertex(i + 1) - vertex(i); }

    friend bool operator==(const ConvexIntegralPolygon&, const ConvexIntegralPolygon&) = default;

private:
    friend ConvexIntegralPolygon validate_polygon(std::span<const LatticeVector>, StartPolicy);
    friend std::optional<ConvexIntegralPolygon> convex_hull(std::span<const LatticeVector>);
    std::vector<LatticeVector> vertices_;
};

struct EdgeDatum {
    std::size_t index = 0;
    LatticeVector edge_vector;
    LatticeVector primitive_direction;
    std::int64_t multiplicity = 0;
    LatticeVector inward_normal;
};

struct InteriorPoints {
    std::int64_t count = 0;
    std::vector<LatticeVector> points;
};


/// Builds the polygon whose boundary walks the given edge vectors in order,
/// starting at `origin`. Throws NotClosed when the vectors do not sum to zero.
ConvexIntegralPolygon polygon_from_edges(std::span<const LatticeVector> edges,
                                         LatticeVector origin = {0, 0},
                                         StartPolicy policy = StartPolicy::LexicographicMin);

/// Convex hull of a point set; nullopt when the hull is not two-dimensional.
std::optional<ConvexIntegralPolygon> convex_hull(std::span<const LatticeVector> points);

std::vector<EdgeDatum> edge_data(const ConvexIntegralPolygon& p);

/// Twice the area (always an integer for lattice polygons).
std::int64_t twice_area(const ConvexIntegralPolygon& p);
std::int64_t boundary_lattice_count(const ConvexIntegralPolygon& p);
InteriorPoints interior_lattice_points(const ConvexIntegralPolygon& p);
std::vector<LatticeVector> lattice_points(const ConvexIntegralPolygon& p);

bool contains(const ConvexIntegralPolygon& p, LatticeVector q);
bool strictly_contains(const ConvexIntegralPolygon& p, LatticeVector q);
bool contains(const ConvexIntegralPolygon& outer, const ConvexIntegralPolygon& inner);

/// Equality up to a lattice translation.
bool translation_equivalent(const ConvexIntegralPolygon& a, const ConvexIntegralPolygon& b);
/// Lexicographically smallest vertex moved to the origin and listed first.
ConvexIntegralPolygon translated_to_origin(const ConvexIntegralPolygon& p);

/// Throws NotUnimodular unless det m == 1.
ConvexIntegralPolygon apply_sl2(const ConvexIntegralPolygon& p, const Mat2& m);

/// One interior lattice point, at most five lattice points in total.
bool is_building_block(const ConvexIntegralPolygon& p);

/// Shrinks p to a building-block subpolygon whose vertices are lattice points
/// of p. Throws NoInteriorPoint when p has none.
ConvexIntegralPolygon find_building_block(const ConvexIntegralPolygon& p);

}  // namespace dimercmg

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

#include <cstdlib>

#include "doctest.h"
#include "dimercmg/error.hpp"
#include "dimercmg/lattice_polygon.hpp"
#include "generators.hpp"

using namespace dimercmg;

namespace {

ConvexIntegralPolygon poly(std::vector<LatticeVector> v) { return validate_polygon(v); }

// Area-sum test: q is strictly inside iff the fan triangles tile the polygon
// with no degenerate member.
std::int64_t interior_by_area_sum(const ConvexIntegralPolygon& p) {
    std::int64_t lo = 1 << 20, hi = -(1 << 20), ylo = lo, yhi = hi;
    for (auto v : p.vertices()) {
        lo = std::min(lo, v.x), hi = std::max(hi, v.x);
        ylo = std::min(ylo, v.y), yhi = std::max(yhi, v.y);
    }
    std::int64_t count = 0;
    for (auto x = lo; x <= hi; ++x)
        for (auto y = ylo; y <= yhi; ++y) {
            LatticeVector q{x, y};
            std::int64_t sum = 0;
            bool degenerate = false;
            for (std::size_t i = 0; i < p.size(); ++i) {
                auto a = pairing(p.vertex(i) - q, p.vertex(i + 1) - q);
                degenerate |= a == 0;
                sum += std::llabs(a);
            }
            if (!degenerate && sum == twice_area(p)) ++count;
        }
    return count;
}

}  // namespace

TEST_CASE("diamond validates with lexicographic start") {
    auto d = poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(d.size() == 4);
    CHECK(d.vertex(0) == LatticeVector{-1, 0});
    for (const auto& e : edge_data(d)) CHECK(e.multiplicity == 1);
}

TEST_CASE("validation keeps the given start when asked") {
    std::vector<LatticeVector> v{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    auto d = validate_polygon(v, StartPolicy::AsGiven);
    CHECK(d.vertex(0) == LatticeVector{1, 0});
    CHECK(d.edge_vector(0) == LatticeVector{-1, 1});
}

TEST_CASE("clockwise input is reversed, closing vertex and collinear points dropped") {
    auto t = poly({{0, 0}, {0, 1}, {1, 0}, {0, 0}});
    CHECK(twice_area(t) == 1);
    auto s = poly({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK(s.size() == 4);
}

TEST_CASE("rejections carry structured codes") {
    auto code_of = [](std::vector<LatticeVector> v) {
        try {
            validate_polygon(v);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidInput;
    };
    CHECK(code_of({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}}) == ErrorCode::NotConvex);
    CHECK(code_of({{0, 0}, {1, 0}, {1, 0}, {0, 1}}) == ErrorCode::RepeatedVertex);
    CHECK(code_of({{0, 0}, {1, 1}, {2, 2}}) == ErrorCode::Degenerate);
    // Pentagram: every turn is a left turn but it winds twice.
    CHECK(code_of({{0, 3}, {-2, -2}, {3, 1}, {-3, 1}, {2, -2}}) == ErrorCode::NotConvex);
    std::vector<LatticeVector> open{{1, 0}, {0, 1}, {-1, 0}};
    CHECK_THROWS_AS(polygon_from_edges(open), Error);
}

TEST_CASE("trapezoid multiplicities") {
    auto t = poly({{0, 0}, {2, 0}, {1, 1}, {0, 1}});
    std::vector<std::int64_t> m;
    for (const auto& e : edge_data(t)) m.push_back(e.multiplicity);
    CHECK(m == std::vector<std::int64_t>{2, 1, 1, 1});
}

TEST_CASE("square of side two has multiplicity two everywhere") {
    auto s = poly({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    for (const auto& e : edge_data(s)) CHECK(e.multiplicity == 2);
}

TEST_CASE("interior points") {
    auto d = poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    auto in = interior_lattice_points(d);
    CHECK(in.count == 1);
    CHECK(in.points.front() == LatticeVector{0, 0});
    CHECK(interior_lattice_points(poly({{0, 0}, {1, 0}, {0, 1}})).count == 0);
    CHECK(interior_lattice_points(poly({{0, 0}, {3, 0}, {0, 3}})).count == 1);
}

TEST_CASE("building block predicate") {
    CHECK(is_building_block(poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})));
    CHECK_FALSE(is_building_block(poly({{0, 0}, {1, 0}, {0, 1}})));
    CHECK_FALSE(is_building_block(poly({{0, 0}, {3, 0}, {0, 3}})));
}

TEST_CASE("building block search") {
    auto d = poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(find_building_block(d) == d);
    auto big = poly({{0, 0}, {3, 0}, {0, 3}});
    auto b = find_building_block(big);
    CHECK(is_building_block(b));
    CHECK(contains(big, b));
    CHECK_THROWS_AS(find_building_block(poly({{0, 0}, {1, 0}, {0, 1}})), Error);
}

TEST_CASE("sl2 action") {
    auto d = poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(apply_sl2(d, Mat2{{{1, 0}, {0, 1}}}) == d);
    auto sheared = apply_sl2(d, Mat2{{{1, 1}, {0, 1}}});
    CHECK(interior_lattice_points(sheared).count == 1);
    CHECK_THROWS_AS(apply_sl2(d, Mat2{{{2, 0}, {0, 1}}}), Error);
    auto t = apply_sl2(poly({{0, 0}, {1, 0}, {0, 1}}), Mat2{{{0, -1}, {1, 0}}});
    CHECK(interior_lattice_points(t).count == 0);
}

TEST_CASE("property: Pick, edge sums, sl2 invariants, building blocks") {
    for (int iter = 0; iter < 300; ++iter) {
        auto p = testgen::random_polygon(5);
        const auto g = interior_lattice_points(p).count;
        CHECK(g == interior_by_area_sum(p));
        CHECK(twice_area(p) == 2 * g + boundary_lattice_count(p) - 2);

        LatticeVector sum;
        std::vector<std::int64_t> mult;
        for (const auto& e : edge_data(p)) {
            sum += e.edge_vector;
            CHECK(e.multiplicity >= 1);
            CHECK(gcd_abs(e.primitive_direction.x, e.primitive_direction.y) == 1);
            CHECK(e.multiplicity * e.primitive_direction == e.edge_vector);
            CHECK(dot(e.inward_normal, e.edge_vector) == 0);
            // Inward: the normal points toward the next vertex beyond the edge.
            CHECK(dot(e.inward_normal, p.vertex(e.index + 2) - p.vertex(e.index)) > 0);
            mult.push_back(e.multiplicity);
        }
        CHECK(sum == LatticeVector{0, 0});

        Mat2 m{{{1, testgen::uniform(-3, 3)}, {0, 1}}};
        if (iter % 2) m = Mat2{{{testgen::uniform(-2, 2), -1}, {1, 0}}};
        auto q = apply_sl2(p, m);
        CHECK(interior_lattice_points(q).count == g);
        CHECK(twice_area(q) == twice_area(p));
        std::vector<std::int64_t> mq;
        for (const auto& e : edge_data(q)) mq.push_back(e.multiplicity);
        std::sort(mult.begin(), mult.end());
        std::sort(mq.begin(), mq.end());
        CHECK(mq == mult);

        if (g >= 1) {
            auto b = find_building_block(p);
            CHECK(is_building_block(b));
            CHECK(contains(p, b));
        }
    }
}

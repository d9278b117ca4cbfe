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

#include <set>

#include "doctest.h"
#include "dimercmg/error.hpp"
#include "dimercmg/torus_graph.hpp"
#include "generators.hpp"

using namespace dimercmg;

namespace {

ErrorCode code_of(RawGraph raw) {
    try {
        validate_graph(std::move(raw));
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidInput;
}

EdgeWeights random_weights(const TorusGraph& g) {
    EdgeWeights w;
    for (const auto& e : g.raw().edges) {
        long p = 0;
        while (p == 0) p = static_cast<long>(testgen::uniform(-9, 9));
        w[e.id] = Rational(p, static_cast<unsigned long>(testgen::uniform(1, 7)));
        w[e.id].canonicalize();
    }
    return w;
}

// A parallel copy of edge 0 sitting right next to it, enclosing a bigon face.
RawGraph with_doubled_edge(RawGraph raw) {
    auto e = raw.edges.front();
    const std::int64_t id = 1000;
    raw.edges.push_back({id, e.black, e.white, e.disp});
    auto insert_after = [&](std::int64_t v, bool after) {
        auto& rot = raw.rotations[v];
        auto it = std::find(rot.begin(), rot.end(), e.id);
        rot.insert(after ? it + 1 : it, id);
    };
    insert_after(e.black, true);
    insert_after(e.white, false);
    return raw;
}

}  // namespace

TEST_CASE("catalog graphs validate with the expected counts") {
    auto sq = catalog("square_lattice").graph;
    CHECK(sq.vertex_count() == 4);
    CHECK(sq.edge_count() == 8);
    CHECK(sq.faces().size() == 4);
    auto hc = catalog("honeycomb").graph;
    CHECK(hc.vertex_count() == 2);
    CHECK(hc.edge_count() == 3);
    CHECK(hc.faces().size() == 1);
    CHECK_THROWS_AS(catalog("pentagon"), Error);
    CHECK_THROWS_AS(catalog("square_lattice_0"), Error);
}

TEST_CASE("fault injection during validation") {
    auto raw = catalog("square_lattice").graph.raw();
    auto bad_disp = raw;
    bad_disp.edges[0].disp.x += 1;
    CHECK(code_of(bad_disp) == ErrorCode::NonContractibleFace);

    auto bad_color = raw;
    std::swap(bad_color.edges[0].black, bad_color.edges[0].white);
    CHECK(code_of(bad_color) == ErrorCode::NotBipartite);

    auto isolated = raw;
    isolated.vertices.push_back({99, Color::White});
    CHECK(code_of(isolated) == ErrorCode::Disconnected);

    RawGraph sphere;
    sphere.vertices = {{0, Color::Black}, {1, Color::White}};
    sphere.edges = {{0, 0, 1, {0, 0}}, {1, 0, 1, {0, 0}}};
    sphere.rotations = {{0, {0, 1}}, {1, {1, 0}}};
    CHECK(code_of(sphere) == ErrorCode::EulerMismatch);

    auto missing = raw;
    missing.rotations[0].pop_back();
    CHECK(code_of(missing) == ErrorCode::InvalidGraph);
}

TEST_CASE("square lattice zig-zag classes and Newton polygon") {
    auto g = catalog("square_lattice").graph;
    std::set<LatticeVector> classes;
    for (const auto& z : g.zigzags()) classes.insert(z.homology_class);
    CHECK(classes == std::set<LatticeVector>{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    auto n = newton_polygon(g);
    std::vector<LatticeVector> diamond{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    CHECK(translation_equivalent(n, validate_polygon(diamond)));
    CHECK(n.vertex(0) == LatticeVector{0, 0});
}

TEST_CASE("honeycomb Newton polygon is a unimodular triangle") {
    auto g = catalog("honeycomb").graph;
    CHECK(g.zigzags().size() == 3);
    auto n = newton_polygon(g);
    CHECK(n.size() == 3);
    CHECK(twice_area(n) == 1);
    // Pairwise independent classes.
    const auto& z = g.zigzags();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) CHECK(pairing(z[i].homology_class, z[j].homology_class) != 0);
}

TEST_CASE("catalog metadata matches extraction; all catalog graphs are minimal") {
    for (const auto& name : catalog_names()) {
        auto c = catalog(name);
        CHECK(newton_polygon(c.graph) == c.expected_newton);
        CHECK(interior_lattice_points(newton_polygon(c.graph)).count == c.genus);
        CHECK(check_minimality(c.graph).minimal);
    }
}

TEST_CASE("a doubled edge breaks minimality") {
    auto g = validate_graph(with_doubled_edge(catalog("square_lattice").graph.raw()));
    auto r = check_minimality(g);
    CHECK_FALSE(r.minimal);
    CHECK_FALSE(r.certificate.empty());
}

TEST_CASE("zig-zag labels follow the Newton polygon edges") {
    auto g = catalog("square_lattice_2").graph;
    auto paths = zig_zag_paths(g);
    auto edges = edge_data(newton_polygon(g));
    std::vector<int> per_edge(edges.size(), 0);
    for (const auto& z : paths) {
        REQUIRE(z.edge_label.has_value());
        CHECK(z.homology_class == edges[*z.edge_label].primitive_direction);
        ++per_edge[*z.edge_label];
    }
    for (std::size_t r = 0; r < edges.size(); ++r) CHECK(per_edge[r] == edges[r].multiplicity);
}

TEST_CASE("seeds") {
    CHECK(seed_of(catalog("honeycomb").graph).epsilon == IntMatrix(1, 1));
    auto eps = seed_of(catalog("square_lattice").graph).epsilon;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK((eps(i, j) == 0 || abs(eps(i, j)) == 2));
            CHECK(eps(i, j) == -eps(j, i));
        }
}

TEST_CASE("face variables") {
    auto g = catalog("square_lattice").graph;
    auto fv = face_variables(g, unit_weights(g));
    for (const auto& x : fv.faces) CHECK(x == 1);
    CHECK(fv.monodromy_x == 1);
    CHECK(fv.monodromy_y == 1);

    auto hc = catalog("honeycomb").graph;
    EdgeWeights w{{0, Rational(2)}, {1, Rational(3)}, {2, Rational(5)}};
    CHECK(face_variables(hc, w).faces == std::vector<Rational>{1});
    CHECK_THROWS_AS(face_variables(hc, EdgeWeights{{0, Rational(2)}}), Error);
}

TEST_CASE("property: double cover, zero sums, skew seeds, gauge invariance") {
    for (const auto& name : catalog_names()) {
        auto g = catalog(name).graph;
        std::vector<int> cover(g.edge_count(), 0);
        LatticeVector total;
        for (const auto& z : g.zigzags()) {
            total += z.homology_class;
            for (auto d : z.darts) ++cover[TorusGraph::edge_of(d)];
        }
        CHECK(total == LatticeVector{0, 0});
        for (auto c : cover) CHECK(c == 2);

        auto eps = seed_of(g).epsilon;
        for (std::size_t i = 0; i < eps.rows(); ++i) {
            Int row = 0;
            for (std::size_t j = 0; j < eps.cols(); ++j) {
                CHECK(eps(i, j) == -eps(j, i));
                row += eps(i, j);
            }
            CHECK(row == 0);
        }

        for (int iter = 0; iter < 10; ++iter) {
            auto w = random_weights(g);
            auto before = face_variables(g, w);
            Rational prod = 1;
            for (const auto& x : before.faces) prod *= x;
            CHECK(prod == 1);
            auto v = static_cast<std::size_t>(testgen::uniform(0, static_cast<std::int64_t>(g.vertex_count()) - 1));
            Rational lambda(static_cast<long>(testgen::uniform(1, 9)), static_cast<unsigned long>(testgen::uniform(1, 9)));
            lambda.canonicalize();
            for (auto e : g.rotation(v)) w[g.edge_id(e)] *= lambda;
            auto after = face_variables(g, w);
            CHECK(after.faces == before.faces);
            CHECK(after.monodromy_x == before.monodromy_x);
            CHECK(after.monodromy_y == before.monodromy_y);
        }
    }
}

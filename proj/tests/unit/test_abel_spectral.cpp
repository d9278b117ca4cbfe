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

#include <map>

#include "doctest.h"
#include "dimercmg/abel_spectral.hpp"
#include "dimercmg/error.hpp"
#include "generators.hpp"

using namespace dimercmg;

namespace {

Rational random_rational() {
    long p = 0;
    while (p == 0) p = static_cast<long>(testgen::uniform(-9, 9));
    Rational r(p, static_cast<unsigned long>(testgen::uniform(1, 6)));
    r.canonicalize();
    return r;
}

EdgeWeights random_weights(const TorusGraph& g) {
    EdgeWeights w;
    for (const auto& e : g.raw().edges) w[e.id] = random_rational();
    return w;
}

LaurentPoly2 random_poly(int terms) {
    LaurentPoly2 p;
    for (int i = 0; i < terms; ++i)
        p.add_term({testgen::uniform(-2, 2), testgen::uniform(-2, 2)}, random_rational());
    return p;
}

// Zig-zag index with the given class on a graph where classes are distinct.
std::size_t zigzag_with_class(const TorusGraph& g, LatticeVector c) {
    for (std::size_t i = 0; i < g.zigzags().size(); ++i)
        if (g.zigzags()[i].homology_class == c) return i;
    FAIL("class not found");
    return 0;
}

}  // namespace

TEST_CASE("Abel map on the square lattice") {
    auto g = catalog("square_lattice").graph;
    auto a = discrete_abel_map(g);
    CHECK(a.values[a.base_white] == Divisor(4, 0));
    const auto alpha = zigzag_with_class(g, {-1, 1}), beta = zigzag_with_class(g, {-1, -1});
    const auto gamma = zigzag_with_class(g, {1, -1}), delta = zigzag_with_class(g, {1, 1});
    Divisor x(4), y(4);
    x[alpha] = -1, x[beta] = 1, x[gamma] = 1, x[delta] = -1;
    y[alpha] = -1, y[beta] = -1, y[gamma] = 1, y[delta] = 1;
    CHECK(div_character(a.classes, {1, 0}) == x);
    CHECK(div_character(a.classes, {0, 1}) == y);
    // Every vertex sits at degree 0 or -2 relative to the white base.
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        CHECK(degree(a.values[v]) == (g.color(v) == Color::White ? 0 : 2));
}

TEST_CASE("Abel map local rule on the honeycomb") {
    auto g = catalog("honeycomb").graph;
    auto a = discrete_abel_map(g);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        Divisor expect(3, 0);
        expect[g.zigzag_of_dart(2 * e)] += 1;
        expect[g.zigzag_of_dart(2 * e + 1)] += 1;
        expect = expect + div_character(a.classes, g.disp(e));
        CHECK(a.values[g.black(e)] - a.values[g.white(e)] == expect);
    }
}

TEST_CASE("Abel map detects inconsistent labels") {
    auto g = catalog("square_lattice").graph;
    std::vector<LatticeVector> classes;
    for (const auto& z : g.zigzags()) classes.push_back(z.homology_class);
    std::vector<std::size_t> wrong{1, 0, 2, 3};
    CHECK_THROWS_AS(propagate_abel(g, wrong, classes, {{1, Divisor(4, 0)}}), Error);
}

TEST_CASE("property: Abel map path independence and equivariance on catalog graphs") {
    for (const auto& name : catalog_names()) {
        auto g = catalog(name).graph;
        auto a = discrete_abel_map(g);
        // Around every zig-zag, the increments sum to div chi of its class.
        for (const auto& z : g.zigzags()) {
            Divisor acc(a.classes.size(), 0);
            for (auto d : z.darts) {
                const auto e = TorusGraph::edge_of(d);
                Divisor step(a.classes.size(), 0);
                step[g.zigzag_of_dart(2 * e)] += 1;
                step[g.zigzag_of_dart(2 * e + 1)] += 1;
                acc = d % 2 ? acc + step : acc - step;
            }
            CHECK(acc == div_character(a.classes, z.homology_class));
        }
    }
}

TEST_CASE("Laurent arithmetic and exact division") {
    auto p = LaurentPoly2::monomial({1, 0}) + LaurentPoly2::monomial({0, -1}, 3);
    CHECK((p * p).coefficient({1, -1}) == 6);
    for (int iter = 0; iter < 50; ++iter) {
        auto a = random_poly(4), b = random_poly(3);
        if (b.is_zero()) continue;
        CHECK(exact_divide(a * b, b) == a);
    }
    auto x = LaurentPoly2::monomial({1, 0}) + LaurentPoly2(1);
    CHECK_THROWS_AS(exact_divide(LaurentPoly2::monomial({2, 0}) + LaurentPoly2(1), x), Error);
    CHECK_THROWS_AS(normalized_poly(LaurentPoly2{}), Error);
}

TEST_CASE("normalization removes scalars and monomial factors") {
    for (int iter = 0; iter < 30; ++iter) {
        auto p = random_poly(5);
        if (p.is_zero()) continue;
        auto q = p.shifted({testgen::uniform(-3, 3), testgen::uniform(-3, 3)}).scaled(random_rational());
        CHECK(normalized_poly(q) == normalized_poly(p));
        CHECK(sign_class_canonical(p.twisted(-1, 1)) == sign_class_canonical(p));
    }
    EdgeWeights w{{0, Rational(2)}, {1, Rational(3)}, {2, Rational(5)}};
    auto n = normalized_poly(kasteleyn_polynomial(catalog("honeycomb").graph, w));
    CHECK(n.terms().size() == 3);
    CHECK(n.terms().begin()->second == 1);
}

TEST_CASE("Kasteleyn polynomials of the catalog") {
    auto hc = catalog("honeycomb").graph;
    EdgeWeights w{{0, Rational(2)}, {1, Rational(3)}, {2, Rational(5)}};
    auto p = kasteleyn_polynomial(hc, w);
    CHECK(p.terms().size() == 3);
    CHECK(twice_area(*newton_polygon_of(p)) == 1);

    auto sq = catalog("square_lattice").graph;
    auto ps = kasteleyn_polynomial(sq, unit_weights(sq));
    CHECK(ps == dimer_cover_expansion(sq, unit_weights(sq)));
    CHECK(translated_to_origin(*newton_polygon_of(ps)) == newton_polygon(sq));
}

TEST_CASE("property: determinant agrees with matching enumeration; Newton polygons agree") {
    for (const auto& name : catalog_names()) {
        auto g = catalog(name).graph;
        for (int iter = 0; iter < 5; ++iter) {
            auto w = random_weights(g);
            auto p = kasteleyn_polynomial(g, w);
            CHECK(p == dimer_cover_expansion(g, w));
            auto np = translated_to_origin(*newton_polygon_of(p));
            CHECK(np == newton_polygon(g));
        }
    }
}

TEST_CASE("property: normalized polynomial is gauge and representative invariant") {
    for (const auto& name : catalog_names()) {
        auto g = catalog(name).graph;
        for (int iter = 0; iter < 5; ++iter) {
            auto w = random_weights(g);
            auto base = normalized_poly(kasteleyn_polynomial(g, w));
            auto v = static_cast<std::size_t>(testgen::uniform(0, static_cast<std::int64_t>(g.vertex_count()) - 1));
            auto gauged = w;
            const auto lambda = random_rational();
            for (auto e : g.rotation(v)) gauged[g.edge_id(e)] *= lambda;
            CHECK(normalized_poly(kasteleyn_polynomial(g, gauged)) == base);

            // Move the representative of v by m.
            LatticeVector m{testgen::uniform(-2, 2), testgen::uniform(-2, 2)};
            auto raw = g.raw();
            for (auto e : g.rotation(v)) raw.edges[e].disp += g.color(v) == Color::White ? m : -1 * m;
            CHECK(normalized_poly(kasteleyn_polynomial(validate_graph(raw), w)) == base);
        }
    }
}

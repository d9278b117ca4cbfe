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

#include <doctest.h>

#include <algorithm>

#include "dimercmg/error.hpp"
#include "dimercmg/laurent.hpp"
#include "dimercmg/modular_group.hpp"
#include "dimercmg/moves.hpp"
#include "generators.hpp"

using namespace dimercmg;

namespace {

LaurentPoly2 spectral(const TorusGraph& g, const EdgeWeights& w) {
    return sign_class_canonical(normalized_poly(kasteleyn_polynomial(g, w)));
}

// Zig-zag monodromies of `after`, each compared with the old path sharing a surviving dart.
bool monodromies_follow(const TorusGraph& before, const EdgeWeights& wb, const TorusGraph& after,
                        const EdgeWeights& wa) {
    const auto mb = zigzag_monodromies(before, wb);
    const auto ma = zigzag_monodromies(after, wa);
    for (std::size_t z = 0; z < after.zigzags().size(); ++z) {
        bool found = false;
        for (auto d : after.zigzags()[z].darts) {
            auto e = before.find_edge(after.edge_id(TorusGraph::edge_of(d)));
            if (!e) continue;
            if (mb[before.zigzag_of_dart(2 * *e + d % 2)] != ma[z]) return false;
            found = true;
        }
        if (!found) return false;
    }
    return true;
}

std::vector<std::size_t> quad_faces(const TorusGraph& g) {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < g.faces().size(); ++f)
        if (g.faces()[f].darts.size() == 4) out.push_back(f);
    return out;
}

}  // namespace

TEST_CASE("urban renewal on an all-ones square face") {
    const auto g = catalog("square_lattice").graph;
    const auto r = spider_move(g, unit_weights(g), 0);
    CHECK(r.graph.vertex_count() == 8);
    CHECK(r.graph.edge_count() == 12);
    for (std::int64_t id = 8; id < 12; ++id) CHECK(r.weights.at(id) == Rational(1));  // pendants
    for (std::int64_t id = 12; id < 16; ++id) CHECK(r.weights.at(id) == Rational(1, 2));
    CHECK(newton_polygon(r.graph) == newton_polygon(g));
}

TEST_CASE("spider moves satisfy the mutation, Casimir and spectral cross-checks") {
    for (std::string name : {"square_lattice", "square_lattice_2", "square_lattice_3"}) {
        const auto g = catalog(name).graph;
        const auto seed = seed_of(g);
        for (int trial = 0; trial < 3; ++trial) {
            const auto w = testgen::random_weights(g);
            const auto x = face_variables(g, w).faces;
            const auto before = spectral(g, w);
            for (auto f : quad_faces(g)) {
                const auto r = spider_move(g, w, f);
                const auto y = face_variables(r.graph, r.weights).faces;  // asserts the product is 1
                const auto m = mutate_x(seed.epsilon, x, f);
                const auto lit = mutate_x_one_line(seed.epsilon, x, f);
                REQUIRE(r.face_map.size() == g.faces().size());
                const auto yk = y[r.face_map.at(f)];
                for (auto [old_f, new_f] : r.face_map) {
                    CHECK(y[new_f] == m[old_f]);
                    Rational shifted = y[new_f];
                    const auto pairing = -seed.epsilon(old_f, f).get_si();
                    if (old_f != f)
                        for (std::int64_t j = 0; j < std::max<std::int64_t>(pairing, 0); ++j) shifted *= yk;
                    CHECK(shifted == lit[old_f]);
                }
                CHECK(monodromies_follow(g, w, r.graph, r.weights));
                CHECK(spectral(r.graph, r.weights) == before);
                CHECK(check_minimality(r.graph).minimal);
            }
        }
    }
}

TEST_CASE("one-line mutation formula on a pairing of 2") {
    IntMatrix eps(2, 2);
    eps(0, 1) = -2;
    eps(1, 0) = 2;
    const auto y = mutate_x_one_line(eps, {Rational(5), Rational(3)}, 1);
    CHECK(y[0] == Rational(5, 16));
    CHECK(y[1] == Rational(1, 3));
}

TEST_CASE("face mutation is an involution") {
    const auto g = catalog("square_lattice_2").graph;
    const auto eps = seed_of(g).epsilon;
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = face_variables(g, testgen::random_weights(g)).faces;
        const auto k = static_cast<std::size_t>(testgen::uniform(0, static_cast<std::int64_t>(x.size()) - 1));
        CHECK(mutate_x(mutate_epsilon(eps, k), mutate_x(eps, x, k), k) == x);
        CHECK(mutate_epsilon(mutate_epsilon(eps, k), k) == eps);
    }
}

TEST_CASE("spider move twice, then contraction, returns the original graph and face variables") {
    const auto g = catalog("square_lattice_2").graph;
    const auto w = testgen::random_weights(g);
    const auto x = face_variables(g, w).faces;
    for (auto f : quad_faces(g)) {
        auto r1 = spider_move(g, w, f);
        const auto first_new = static_cast<std::int64_t>(g.next_vertex_id());
        auto r = spider_move(r1.graph, r1.weights, r1.face_map.at(f));
        for (std::int64_t id = first_new; id < first_new + 4; ++id) r = contract_vertex(r.graph, r.weights, id);
        const auto isos = find_isomorphisms(r.graph, g);
        REQUIRE(!isos.empty());
        bool match = false;
        for (const auto& c : isos) {
            EdgeWeights back;
            for (auto [from, to] : c.edge_map) back[to] = r.weights.at(from);
            match |= face_variables(g, back).faces == x;
        }
        CHECK(match);
    }
}

TEST_CASE("expansion and contraction are inverse and keep the invariants") {
    for (std::string name : {"square_lattice_2", "honeycomb_2", "honeycomb_3"}) {
        const auto g = catalog(name).graph;
        const auto w = testgen::random_weights(g);
        const auto x = face_variables(g, w).faces;
        const auto p = spectral(g, w);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            const auto& rot = g.rotation(v);
            const auto start = static_cast<std::size_t>(testgen::uniform(0, static_cast<std::int64_t>(rot.size()) - 1));
            const auto count = static_cast<std::size_t>(testgen::uniform(1, static_cast<std::int64_t>(rot.size()) - 1));
            const auto r = expand_vertex(g, w, g.vertex_id(v), g.edge_id(rot[start]), count);
            CHECK(r.graph.vertex_count() == g.vertex_count() + 2);
            CHECK(monodromies_follow(g, w, r.graph, r.weights));
            CHECK(spectral(r.graph, r.weights) == p);
            const auto mid = static_cast<std::int64_t>(g.next_vertex_id()) + 1;
            const auto back = contract_vertex(r.graph, r.weights, mid);
            CHECK(back.graph.vertex_count() == g.vertex_count());
            CHECK(monodromies_follow(r.graph, r.weights, back.graph, back.weights));
            // Same faces, same variables, up to the order validation assigns.
            auto y = face_variables(back.graph, back.weights).faces;
            auto xs = x;
            std::sort(y.begin(), y.end());
            std::sort(xs.begin(), xs.end());
            CHECK(y == xs);
            for (auto [from, to] : back.face_map) CHECK(face_variables(back.graph, back.weights).faces[to] == x[from]);
        }
    }
}

TEST_CASE("move preconditions") {
    const auto hex = catalog("honeycomb").graph;
    CHECK_THROWS_WITH_AS(spider_move(hex, unit_weights(hex), 0), doctest::Contains("NotQuadFace"), Error);
    const auto sq = catalog("square_lattice").graph;
    CHECK_THROWS_WITH_AS(contract_vertex(sq, unit_weights(sq), 0), doctest::Contains("NotTwoValent"), Error);
    CHECK_THROWS_WITH_AS(expand_vertex(sq, unit_weights(sq), 0, sq.edge_id(sq.rotation(0)[0]), 0),
                         doctest::Contains("MoveNotApplicable"), Error);
    CHECK_THROWS_WITH_AS(expand_vertex(sq, unit_weights(sq), 0, sq.edge_id(sq.rotation(0)[0]), 4),
                         doctest::Contains("MoveNotApplicable"), Error);
    CHECK_THROWS_WITH_AS(spider_move(sq, unit_weights(sq), 99), doctest::Contains("InvalidInput"), Error);
}

TEST_CASE("closing isomorphisms are checked") {
    const auto g = catalog("square_lattice").graph;
    auto seq = translation_sequence(g, {0, 0});
    auto bad = seq;
    std::swap(bad.segments[0].closing.edge_map[0], bad.segments[0].closing.edge_map[2]);
    CHECK_THROWS_WITH_AS(run_sequence(bad, unit_weights(g)), doctest::Contains("ClosingIsomorphismInvalid"), Error);
    bad = seq;
    bad.segments[0].closing.vertex_map[0] = 3;
    bad.segments[0].closing.vertex_map[3] = 0;
    CHECK_THROWS_WITH_AS(run_sequence(bad, unit_weights(g)), doctest::Contains("ClosingIsomorphismInvalid"), Error);
    // Automorphisms acting nontrivially on homology are not closings.
    for (const auto& c : find_isomorphisms(g, g)) CHECK_NOTHROW(verify_closing(g, g, c));
    CHECK(find_isomorphisms(g, catalog("honeycomb_2").graph).empty());
}

TEST_CASE("pure translations have trivial psi with g = j(m)") {
    for (const auto& name : catalog_names()) {
        const auto g = catalog(name).graph;
        const auto B = build_j(newton_polygon(g)).B;
        for (int trial = 0; trial < 5; ++trial) {
            const LatticeVector m{testgen::uniform(-3, 3), testgen::uniform(-3, 3)};
            const auto rep = run_sequence(translation_sequence(g, m), unit_weights(g));
            CHECK(rep.profile.per_edge == B * IntVector{m.x, m.y});
            CHECK(std::all_of(rep.profile.reduced.begin(), rep.profile.reduced.end(), [](const Int& v) { return v == 0; }));
            CHECK(is_trivial(translation_sequence(g, m)));
        }
    }
}

TEST_CASE("square-lattice domino shuffle") {
    const auto seq = square_lattice_domino_shuffle();
    const auto& g = seq.base;
    const auto rep = run_sequence(seq, unit_weights(g));
    // d - d_t at w_0 is beta - alpha.
    for (std::size_t z = 0; z < g.zigzags().size(); ++z) {
        const auto c = g.zigzags()[z].homology_class;
        const std::int64_t expected = c == LatticeVector{-1, -1} ? 1 : c == LatticeVector{-1, 1} ? -1 : 0;
        CHECK(rep.abel_shift[z] == expected);
    }
    CHECK_FALSE(is_trivial(seq));
    for (auto [e, x] : rep.final_weights) CHECK(x == Rational(1, 2));

    // The shuffle keeps the spectral curve and face variables up to the closing.
    const auto w = testgen::random_weights(g);
    const auto r = run_sequence(seq, w);
    CHECK(spectral(g, r.final_weights) == spectral(g, w));
}

TEST_CASE("psi is a homomorphism on composites") {
    const auto g = catalog("square_lattice").graph;
    const auto B = build_j(newton_polygon(g)).B;
    const auto shuffle = square_lattice_domino_shuffle();
    for (int trial = 0; trial < 8; ++trial) {
        MoveSequence a = translation_sequence(g, {testgen::uniform(-2, 2), testgen::uniform(-2, 2)});
        const auto na = testgen::uniform(0, 3), nb = testgen::uniform(0, 3);
        for (int i = 0; i < na; ++i) a = concatenate(a, shuffle);
        MoveSequence b = translation_sequence(g, {testgen::uniform(-2, 2), testgen::uniform(-2, 2)});
        for (int i = 0; i < nb; ++i) b = concatenate(shuffle, b);
        IntVector sum = psi(a);
        const auto pb = psi(b);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += pb[i];
        CHECK(psi(concatenate(a, b)) == reduce_mod_image(sum, B));
    }
}

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

#include "dimercmg/error.hpp"
#include "dimercmg/json_io.hpp"
#include "generators.hpp"

using namespace dimercmg;

TEST_CASE("rationals round-trip as exact strings") {
    CHECK(rational_from_json("3/6") == Rational(1, 2));
    CHECK(rational_from_json(4) == Rational(4));
    CHECK(rational_from_json("-7/3") == Rational(-7, 3));
    CHECK(rational_to_json(Rational(6, 4)) == "6/4");
    CHECK_THROWS_AS(rational_from_json("1/0"), Error);
    CHECK_THROWS_AS(rational_from_json("x"), Error);
    CHECK_THROWS_AS(rational_from_json(0.5), Error);
}

TEST_CASE("polygon JSON accepts clockwise input") {
    const auto p = polygon_from_json(Json::parse(R"({"vertices": [[0,1],[1,0],[0,-1],[-1,0]]})"));
    CHECK(p == polygon_from_json(Json::parse(R"([[1,0],[0,1],[-1,0],[0,-1]])")));
    CHECK(polygon_from_json(polygon_to_json(p)) == p);
    CHECK_THROWS_WITH_AS(polygon_from_json(Json::parse(R"({"vertices": [[0,0],[1,1],[2,2]]})")),
                         doctest::Contains("Degenerate"), Error);
    CHECK_THROWS_WITH_AS(polygon_from_json(Json::parse(R"({"points": []})")), doctest::Contains("InvalidInput"),
                         Error);
}

TEST_CASE("graph and weight JSON round-trip") {
    for (const auto& name : catalog_names()) {
        const auto g = catalog(name).graph;
        const auto j = graph_to_json(g);
        const auto h = graph_from_json(Json::parse(j.dump()));
        CHECK(graph_to_json(h) == j);
        CHECK(newton_polygon(h) == newton_polygon(g));
        const auto w = testgen::random_weights(g);
        CHECK(weights_from_json(Json::parse(weights_to_json(w).dump())) == w);
    }
    auto j = graph_to_json(catalog("square_lattice").graph);
    j["vertices"][0]["color"] = "red";
    CHECK_THROWS_WITH_AS(graph_from_json(j), doctest::Contains("InvalidInput"), Error);
    j = graph_to_json(catalog("square_lattice").graph);
    j["edges"][0]["white"] = j["edges"][0]["black"];
    CHECK_THROWS_AS(graph_from_json(j), Error);
    CHECK_THROWS_WITH_AS(weights_from_json(Json::parse(R"({"0": "0/5"})")), doctest::Contains("zero weight"), Error);
}

TEST_CASE("move scripts round-trip") {
    const auto seq = square_lattice_domino_shuffle();
    const auto j = sequence_to_json(seq, "square_lattice");
    const auto back = sequence_from_json(Json::parse(j.dump()));
    CHECK(sequence_to_json(back, "square_lattice") == j);
    CHECK(psi(back) == psi(seq));
    const auto two = concatenate(seq, seq);
    CHECK(sequence_from_json(sequence_to_json(two, "square_lattice")).segments.size() == 2);
    CHECK_THROWS_WITH_AS(sequence_from_json(Json::parse(R"({"graph": "square_lattice", "moves": [{"flip": 1}],
        "closing": {"vertex_map": {}, "edge_map": {}}})")),
                         doctest::Contains("unknown move"), Error);
}

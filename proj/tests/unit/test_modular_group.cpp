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
#include <set>

#include "doctest.h"
#include "dimercmg/error.hpp"
#include "dimercmg/modular_group.hpp"
#include "dimercmg/oracles.hpp"
#include "generators.hpp"

using namespace dimercmg;

namespace {

ConvexIntegralPolygon reference_diamond() {
    std::vector<LatticeVector> v{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return validate_polygon(v, StartPolicy::AsGiven);
}

ConvexIntegralPolygon poly(std::vector<LatticeVector> v) { return validate_polygon(v); }

}  // namespace

TEST_CASE("embedding matrix of the diamond") {
    auto j = build_j(reference_diamond());
    CHECK(j.B == IntMatrix::from_rows({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}));
    auto t = build_j(poly({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(t.B.rows() == 3);
    for (std::size_t c = 0; c < 2; ++c) {
        Int s = 0;
        for (std::size_t r = 0; r < 3; ++r) s += t.B(r, c);
        CHECK(s == 0);
    }
}

TEST_CASE("ambient quotients") {
    CHECK(ambient_quotient(reference_diamond()) == FgAbelianGroup{2, {2}});
    CHECK(ambient_quotient(poly({{0, 0}, {1, 0}, {0, 1}})) == FgAbelianGroup{1, {}});
    auto sq = poly({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK(ambient_quotient(sq).torsion == torsion_by_minors(build_j(sq).B));
}

TEST_CASE("cluster modular groups") {
    auto d = cluster_modular_group(reference_diamond());
    CHECK(d.group == FgAbelianGroup{1, {2}});
    CHECK(d.case_tag == GroupCase::InteriorPoint);
    auto t = cluster_modular_group(poly({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(t.group == FgAbelianGroup{});
    CHECK(t.case_tag == GroupCase::NoInteriorPoint);
    auto t2 = poly({{0, 0}, {2, 0}, {0, 2}});
    CHECK(cluster_modular_group(t2).group == genus_zero_by_enumeration(t2));
    CHECK(cluster_modular_group(t2).group == FgAbelianGroup{0, {2, 2}});
}

TEST_CASE("torsion lattice of the diamond") {
    auto L = torsion_lattice(reference_diamond());
    CHECK(L.basis[0] == RationalVector{1, 0});
    CHECK(L.basis[1] == RationalVector{Rational(-1, 2), Rational(1, 2)});
    CHECK(L.index == 2);
    CHECK_THROWS_AS(torsion_lattice(poly({{0, 0}, {1, 0}, {0, 1}})), Error);
}

TEST_CASE("maximal translation polygon of the diamond") {
    auto d = reference_diamond();
    std::array<RationalVector, 2> basis{RationalVector{1, 0}, RationalVector{Rational(-1, 2), Rational(1, 2)}};
    auto m = max_translation_polygon(d, basis);
    std::vector<std::array<Int, 2>> expect{{0, 1}, {-1, -1}, {0, -1}, {1, 1}};
    CHECK(m.w_coefficients == expect);
    std::array<RationalVector, 2> wrong{RationalVector{1, 0}, RationalVector{0, 1}};
    CHECK_THROWS_AS(max_translation_polygon(d, wrong), Error);
}

TEST_CASE("pic0 presentation of the diamond") {
    auto p = pic0_stack_presentation(reference_diamond());
    CHECK(p.generators.size() == 4);
    CHECK(p.group == FgAbelianGroup{1, {2}});
}

TEST_CASE("property: group structure over random polygons") {
    for (int iter = 0; iter < 200; ++iter) {
        auto p = testgen::random_polygon(iter % 2 ? 3 : 5, 7);
        const auto n = p.size();
        const auto B = build_j(p).B;
        CHECK(smith_normal_form(B).rank == 2);
        auto res = cluster_modular_group(p);
        if (res.genus >= 1) {
            CHECK(res.group.rank == n - 3);
            // A = G + Z, so the torsion of G is the torsion of A.
            CHECK(res.group.torsion == torsion_by_minors(B));
            CHECK(pic0_stack_presentation(p).group == res.group);

            auto L = torsion_lattice(p);
            Int tor = 1;
            for (const auto& d : ambient_quotient(p).torsion) tor *= d;
            CHECK(L.index == tor);
            // H_1(T,Z) sits inside L: the standard basis has integral coordinates.
            for (const auto& e : {RationalVector{1, 0}, RationalVector{0, 1}}) {
                const auto& b = L.basis;
                Rational det = b[0].x * b[1].y - b[0].y * b[1].x;
                Rational c1 = (e.x * b[1].y - e.y * b[1].x) / det;
                Rational c2 = (b[0].x * e.y - b[0].y * e.x) / det;
                CHECK(c1.get_den() == 1);
                CHECK(c2.get_den() == 1);
            }
            auto m = max_translation_polygon(p);
            Int sx = 0, sy = 0;
            for (const auto& w : m.w_coefficients) sx += w[0], sy += w[1];
            CHECK(sx == 0);
            CHECK(sy == 0);
            CHECK(m.polygon.size() == n);
            if (tor == 1) {
                auto std_basis = std::array<RationalVector, 2>{RationalVector{1, 0}, RationalVector{0, 1}};
                CHECK(translation_equivalent(max_translation_polygon(p, std_basis).polygon, p));
            }
        } else {
            CHECK(res.group.rank == 0);
            Int order = 1;
            for (const auto& e : edge_data(p)) order *= static_cast<long>(e.multiplicity);
            if (order <= 4096) CHECK(res.group == genus_zero_by_enumeration(p));
        }
    }
}

TEST_CASE("genus-zero enumeration with mixed primes") {
    const auto p = poly({{-2, 1}, {0, 0}, {5, 0}, {1, 1}});
    CHECK(genus_zero_by_enumeration(p) == FgAbelianGroup{0, {15}});
    CHECK(cluster_modular_group(p).group == FgAbelianGroup{0, {15}});
}

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

#include "dimercmg/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "dimercmg/abel_spectral.hpp"
#include "dimercmg/error.hpp"
#include "dimercmg/json_io.hpp"
#include "dimercmg/laurent.hpp"
#include "dimercmg/modular_group.hpp"
#include "dimercmg/moves.hpp"
#include "dimercmg/oracles.hpp"

namespace dimercmg {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> suite_names() { return {"group", "moves", "spectral", "appendix"}; }

CatalogEntry suite_catalog(const std::string& name, const VerifyOptions& opts) {
    auto entry = catalog(name);
    if (!opts.catalog_dir) return entry;
    const auto path = *opts.catalog_dir / (name + ".json");
    if (!std::filesystem::exists(path)) return entry;
    try {
        entry.graph = graph_from_json(read_json_file(path));
    } catch (const Error& e) {
        const std::string what = e.what();
        throw Error(e.code(), path.filename().string() + ": " + what.substr(what.find(": ") + 2));
    }
    const auto n = newton_polygon(entry.graph);
    if (!(n == entry.expected_newton)) throw std::runtime_error(name + ": Newton polygon differs from the catalog metadata");
    if (interior_lattice_points(n).count != entry.genus) throw std::runtime_error(name + ": genus differs from the catalog metadata");
    return entry;
}

namespace {

using Rng = std::mt19937_64;

// Independent stream per check so suites can be run in any order.
Rng stream(const VerifyOptions& opts, const std::string& id) {
    return Rng(opts.seed * 0x9e3779b97f4a7c15ULL ^ std::hash<std::string>{}(id));
}

std::int64_t uniform(Rng& r, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(r);
}

// A failed expectation inside a check body.
struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

CheckResult run_check(std::string id, std::string description, const std::function<std::string()>& body) {
    CheckResult c{std::move(id), std::move(description), false, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
        c.detail = body();
        c.passed = true;
    } catch (const Failure& f) {
        c.detail = f.what;
    } catch (const Error& e) {
        c.detail = e.what();
    } catch (const std::exception& e) {
        c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return c;
}

std::string str(const ConvexIntegralPolygon& p) {
    std::ostringstream s;
    for (auto v : p.vertices()) s << "(" << v.x << "," << v.y << ")";
    return s.str();
}

std::string str(const FgAbelianGroup& g) { return g.to_string(); }

ConvexIntegralPolygon reference_diamond() {
    std::vector<LatticeVector> v{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return validate_polygon(v, StartPolicy::AsGiven);
}

// Hull of random points with coordinates in [-8, 8].
ConvexIntegralPolygon random_polygon(Rng& r) {
    while (true) {
        std::vector<LatticeVector> pts;
        const auto n = uniform(r, 3, 8);
        const auto box = uniform(r, 1, 8);
        for (std::int64_t i = 0; i < n; ++i) pts.push_back({uniform(r, -box, box), uniform(r, -box, box)});
        if (auto h = convex_hull(pts)) return *h;
    }
}

std::vector<ConvexIntegralPolygon> corpus_with_interior(Rng& r, std::size_t count) {
    std::vector<ConvexIntegralPolygon> out;
    while (out.size() < count) {
        auto p = random_polygon(r);
        if (interior_lattice_points(p).count > 0) out.push_back(p);
    }
    return out;
}

// Genus-zero polygons: height-one trapezoids and twice the unit triangle, moved by
// random unimodular maps while the coordinates stay within 8.
std::vector<ConvexIntegralPolygon> corpus_genus_zero(Rng& r, std::size_t count) {
    std::vector<ConvexIntegralPolygon> out;
    while (out.size() < count) {
        std::vector<LatticeVector> v;
        if (uniform(r, 0, 5) == 0) {
            v = {{0, 0}, {2, 0}, {0, 2}};
        } else {
            const auto a = uniform(r, 1, 5), b = uniform(r, -3, 3), c = b + uniform(r, 0, 4);
            v = {{0, 0}, {a, 0}, {c, 1}, {b, 1}};
        }
        auto p = convex_hull(v);
        if (!p) continue;
        for (std::int64_t k = uniform(r, 0, 3); k > 0; --k) {
            const auto t = uniform(r, -2, 2);
            const Mat2 m = uniform(r, 0, 1) ? Mat2{{{1, t}, {0, 1}}} : Mat2{{{1, 0}, {t, 1}}};
            *p = apply_sl2(*p, m);
        }
        bool small = true;
        for (auto q : p->vertices()) small &= std::abs(q.x) <= 8 && std::abs(q.y) <= 8;
        if (small) out.push_back(*p);
    }
    return out;
}

CheckResult check_eg1() {
    return run_check("C1", "diamond: B, Smith form (1,2), A = Z^2 + Z/2, L and the w-matrix", [] {
        const auto d = reference_diamond();
        const auto B = build_j(d).B;
        expect(B == IntMatrix::from_rows({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}), "B = " + B.to_string());
        const auto snf = smith_normal_form(B);
        expect(snf.rank == 2 && snf.D(0, 0) == 1 && snf.D(1, 1) == 2, "Smith form " + snf.D.to_string());
        expect(ambient_quotient(d) == FgAbelianGroup{2, {2}}, "A = " + str(ambient_quotient(d)));
        const auto L = torsion_lattice(d);
        expect(L.basis[0] == RationalVector{1, 0} && L.basis[1] == RationalVector{Rational(-1, 2), Rational(1, 2)},
               "L basis differs from (1,0), (-1/2,1/2)");
        const auto m = max_translation_polygon(d, L.basis);
        const std::vector<std::array<Int, 2>> w{{0, 1}, {-1, -1}, {0, -1}, {1, 1}};
        expect(m.w_coefficients == w, "w-matrix differs");
        const auto g = cluster_modular_group(d).group;
        expect(g == FgAbelianGroup{1, {2}}, "G_N = " + str(g));
        return std::string("G_N = ") + str(g);
    });
}

CheckResult check_rank_law(const VerifyOptions& opts, const std::vector<ConvexIntegralPolygon>& with_interior) {
    return run_check("C2", "rank law: rank G_N = |E_N| - 3 for g >= 1, 0 for g = 0", [&] {
        auto r = stream(opts, "C2");
        for (const auto& p : with_interior) {
            const auto g = cluster_modular_group(p).group;
            expect(g.rank + 3 == p.size(), str(p) + ": rank " + std::to_string(g.rank) + " with " +
                                               std::to_string(p.size()) + " edges");
        }
        const auto zero = corpus_genus_zero(r, 100);
        for (const auto& p : zero) {
            const auto g = cluster_modular_group(p).group;
            expect(g.rank == 0, str(p) + ": genus zero but rank " + std::to_string(g.rank));
        }
        return std::to_string(with_interior.size()) + " polygons with g >= 1, " + std::to_string(zero.size()) +
               " with g = 0";
    });
}

CheckResult check_genus_zero(const VerifyOptions& opts) {
    return run_check("C3", "g = 0 groups agree with the divisibility-sublattice enumeration", [&] {
        std::vector<LatticeVector> unit{{0, 0}, {1, 0}, {0, 1}}, twice{{0, 0}, {2, 0}, {0, 2}};
        expect(cluster_modular_group(validate_polygon(unit)).group == FgAbelianGroup{}, "unit triangle not trivial");
        const auto t2 = validate_polygon(twice);
        const auto g = cluster_modular_group(t2).group;
        const auto oracle = genus_zero_by_enumeration(t2);
        expect(g == oracle, "2-triangle: " + str(g) + " vs enumeration " + str(oracle));
        auto r = stream(opts, "C3");
        std::size_t n = 0;
        for (const auto& p : corpus_genus_zero(r, 60)) {
            const auto a = cluster_modular_group(p).group, b = genus_zero_by_enumeration(p);
            expect(a == b, str(p) + ": " + str(a) + " vs enumeration " + str(b));
            ++n;
        }
        return "2-triangle: " + str(g) + "; " + std::to_string(n) + " random genus-zero polygons agree";
    });
}

CheckResult check_pic0(const std::vector<ConvexIntegralPolygon>& with_interior) {
    return run_check("C10", "Pic0 presentation agrees with the cluster modular group", [&] {
        for (const auto& p : with_interior) {
            const auto a = pic0_stack_presentation(p).group, b = cluster_modular_group(p).group;
            expect(a == b, str(p) + ": Pic0 " + str(a) + " vs " + str(b));
        }
        return std::to_string(with_interior.size()) + " polygons";
    });
}

CheckResult check_building_blocks(const VerifyOptions& opts) {
    return run_check("C9", "building blocks: one interior point, <= 5 lattice points, <= 4 edges, inside P", [&] {
        auto r = stream(opts, "C9");
        const auto corpus = corpus_with_interior(r, 200);
        for (const auto& p : corpus) {
            const auto d = find_building_block(p);
            expect(contains(p, d), str(p) + ": block " + str(d) + " not contained");
            expect(is_building_block(d), str(p) + ": " + str(d) + " is not a building block");
            expect(interior_lattice_points(d).count == 1, str(d) + ": interior count");
            expect(lattice_points(d).size() <= 5, str(d) + ": more than 5 lattice points");
            expect(d.size() <= 4, str(d) + ": more than 4 edges");
        }
        return std::to_string(corpus.size()) + " polygons";
    });
}

EdgeWeights random_weights(Rng& r, const TorusGraph& g) {
    EdgeWeights w;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        Rational q(static_cast<long>(uniform(r, 1, 9)), static_cast<unsigned long>(uniform(r, 1, 9)));
        q.canonicalize();
        w[g.edge_id(e)] = q;
    }
    return w;
}

LaurentPoly2 spectral(const TorusGraph& g, const EdgeWeights& w) {
    return sign_class_canonical(normalized_poly(kasteleyn_polynomial(g, w)));
}

// Index of the zig-zag path with the given class; the square lattice has one per class.
std::size_t zigzag_with_class(const TorusGraph& g, LatticeVector c) {
    for (std::size_t z = 0; z < g.zigzags().size(); ++z)
        if (g.zigzags()[z].homology_class == c) return z;
    throw Failure{"no zig-zag path of class (" + std::to_string(c.x) + "," + std::to_string(c.y) + ")"};
}

CheckResult check_catalog(const VerifyOptions& opts) {
    return run_check("catalog", "catalog graphs validate, are minimal and match their metadata", [&] {
        for (const auto& name : catalog_names()) {
            const auto e = suite_catalog(name, opts);
            const auto m = check_minimality(e.graph);
            expect(m.minimal, name + ": not minimal (" + m.certificate + ")");
        }
        return std::to_string(catalog_names().size()) + " graphs";
    });
}

CheckResult check_newton(const VerifyOptions& opts) {
    return run_check("C4", "Newton polygons: square lattice -> diamond, honeycomb -> unit triangle; both minimal", [&] {
        const auto sq = suite_catalog("square_lattice", opts).graph;
        const auto n = newton_polygon(sq);
        expect(n == translated_to_origin(reference_diamond()), "square lattice gives " + str(n));
        const auto hex = suite_catalog("honeycomb", opts).graph;
        const auto t = newton_polygon(hex);
        expect(t.size() == 3 && twice_area(t) == 1, "honeycomb gives " + str(t));
        expect(check_minimality(sq).minimal, "square lattice not minimal");
        expect(check_minimality(hex).minimal, "honeycomb not minimal");
        return "diamond " + str(n) + ", triangle " + str(t);
    });
}

CheckResult check_abel(const VerifyOptions& opts) {
    return run_check("C5", "discrete Abel map on the square lattice: base value, path independence, div chi", [&] {
        const auto g = suite_catalog("square_lattice", opts).graph;
        const auto d = discrete_abel_map(g);
        expect(degree(d.values[d.base_white]) == 0 &&
                   std::all_of(d.values[d.base_white].begin(), d.values[d.base_white].end(),
                               [](std::int64_t x) { return x == 0; }),
               "d(w_0) is not 0");
        // Walk closed cycles; the lifted value must come back shifted by div chi^m.
        auto walk = [&](const std::vector<std::size_t>& darts) {
            Divisor value = d.values[g.tail(darts.front())];
            LatticeVector m;
            for (auto x : darts) {
                const auto e = TorusGraph::edge_of(x);
                Divisor step(d.classes.size(), 0);
                step[g.zigzag_of_dart(2 * e)] += 1;
                step[g.zigzag_of_dart(2 * e + 1)] += 1;
                value = g.color(g.tail(x)) == Color::Black ? value - step : value + step;
                m += g.dart_disp(x);
            }
            return value == d.values[g.tail(darts.front())] + div_character(d.classes, m);
        };
        std::size_t cycles = 0;
        for (const auto& f : g.faces()) expect(walk(f.darts), "face cycle not closed"), ++cycles;
        for (const auto& c : homology_basis_cycles(g)) expect(walk(c), "homology cycle inconsistent"), ++cycles;
        for (const auto& z : g.zigzags()) expect(walk(z.darts), "zig-zag cycle inconsistent"), ++cycles;
        const auto a = zigzag_with_class(g, {-1, 1}), b = zigzag_with_class(g, {-1, -1}),
                   c = zigzag_with_class(g, {1, -1}), dl = zigzag_with_class(g, {1, 1});
        Divisor x(4, 0), y(4, 0);
        x[a] = -1, x[b] = 1, x[c] = 1, x[dl] = -1;
        y[a] = -1, y[b] = -1, y[c] = 1, y[dl] = 1;
        expect(div_character(d.classes, {1, 0}) == x, "div chi^(1,0) is not -a+b+c-d");
        expect(div_character(d.classes, {0, 1}) == y, "div chi^(0,1) is not -a-b+c+d");
        return std::to_string(cycles) + " cycles consistent";
    });
}

CheckResult check_kasteleyn(const VerifyOptions& opts) {
    return run_check("C8", "Kasteleyn determinant equals the signed matching enumeration", [&] {
        auto r = stream(opts, "C8");
        std::size_t graphs = 0, runs = 0;
        for (const auto& name : catalog_names()) {
            const auto g = suite_catalog(name, opts).graph;
            if (g.edge_count() > 12) continue;
            ++graphs;
            for (int i = 0; i < 20; ++i, ++runs) {
                const auto w = random_weights(r, g);
                const auto p = kasteleyn_polynomial(g, w), q = dimer_cover_expansion(g, w);
                expect(p == q, name + ": " + p.to_string() + " vs " + q.to_string());
            }
        }
        expect(graphs >= 3, "fewer than three catalog graphs with at most 12 edges");
        return std::to_string(graphs) + " graphs, " + std::to_string(runs) + " weightings";
    });
}

CheckResult check_move_invariance(const VerifyOptions& opts) {
    return run_check("C6", "spider moves: mutation formula, zig-zag monodromies, spectral curve, product of X_F", [&] {
        auto r = stream(opts, "C6");
        const std::vector<std::string> names{"square_lattice", "square_lattice_2"};
        std::size_t moves = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const auto& name = names[static_cast<std::size_t>(trial) % names.size()];
            const auto g = suite_catalog(name, opts).graph;
            const auto w = random_weights(r, g);
            const auto seed = seed_of(g);
            const auto x = face_variables(g, w).faces;
            const auto before = spectral(g, w);
            const auto mono = zigzag_monodromies(g, w);
            for (std::size_t f = 0; f < g.faces().size(); ++f) {
                if (g.faces()[f].darts.size() != 4) continue;
                const auto res = spider_move(g, w, f);
                const auto y = face_variables(res.graph, res.weights).faces;
                Rational prod = 1;
                for (const auto& v : y) prod *= v;
                expect(prod == 1, name + ": product of face variables " + prod.get_str());
                const auto std_form = mutate_x(seed.epsilon, x, f);
                const auto one_line = mutate_x_one_line(seed.epsilon, x, f);
                const auto yk = y.at(res.face_map.at(f));
                expect(res.face_map.size() == x.size(), name + ": faces lost their correspondence");
                for (auto [o, n] : res.face_map) {
                    expect(y[n] == std_form[o], name + ": face " + std::to_string(o) + " mutation mismatch");
                    Rational shifted = y[n];
                    const auto pairing = -seed.epsilon(o, f).get_si();
                    if (o != f)
                        for (std::int64_t j = 0; j < pairing; ++j) shifted *= yk;
                    expect(shifted == one_line[o], name + ": face " + std::to_string(o) + " one-line formula mismatch");
                }
                const auto after = zigzag_monodromies(res.graph, res.weights);
                for (std::size_t z = 0; z < after.size(); ++z) {
                    std::optional<std::size_t> old;
                    for (auto d : res.graph.zigzags()[z].darts)
                        if (auto e = g.find_edge(res.graph.edge_id(TorusGraph::edge_of(d))))
                            old = g.zigzag_of_dart(2 * *e + d % 2);
                    expect(old && mono[*old] == after[z], name + ": zig-zag monodromy changed");
                }
                expect(spectral(res.graph, res.weights) == before, name + ": spectral polynomial changed");
                ++moves;
            }
        }
        return "100 weightings, " + std::to_string(moves) + " spider moves";
    });
}

CheckResult check_domino(const VerifyOptions& opts) {
    return run_check("C7", "domino shuffle: valid closing, sum g = 0, Abel shift +-(a - b), nontrivial; translations trivial", [&] {
        MoveSequence seq = square_lattice_domino_shuffle();
        std::string source = "built-in script";
        if (opts.data_dir) {
            const auto path = *opts.data_dir / "scripts" / "domino.json";
            seq = sequence_from_json(read_json_file(path), path.parent_path());
            source = path.filename().string();
        }
        const auto& g = seq.base;
        const auto rep = run_sequence(seq, unit_weights(g));
        Int sum = 0;
        for (const auto& v : rep.profile.per_edge) sum += v;
        expect(sum == 0, "sum of g(E_rho) is " + sum.get_str());
        Divisor ab(g.zigzags().size(), 0);
        ab[zigzag_with_class(g, {-1, 1})] = 1;
        ab[zigzag_with_class(g, {-1, -1})] = -1;
        Divisor ba(ab.size());
        for (std::size_t i = 0; i < ab.size(); ++i) ba[i] = -ab[i];
        expect(rep.abel_shift == ab || rep.abel_shift == ba, "Abel shift is not +-(alpha - beta)");
        expect(!is_trivial(rep.profile, newton_polygon(g)), "domino shuffle reported trivial");
        auto r = stream(opts, "C7");
        for (const auto& name : catalog_names()) {
            const auto h = suite_catalog(name, opts).graph;
            for (int i = 0; i < 4; ++i) {
                const LatticeVector m{uniform(r, -4, 4), uniform(r, -4, 4)};
                const auto t = run_sequence(translation_sequence(h, m), unit_weights(h));
                expect(std::all_of(t.profile.reduced.begin(), t.profile.reduced.end(), [](const Int& v) { return v == 0; }),
                       name + ": translation has nonzero psi");
                expect(is_trivial(t.profile, newton_polygon(h)), name + ": translation not trivial");
            }
        }
        std::string red;
        for (const auto& v : rep.profile.reduced) red += (red.empty() ? "" : ",") + v.get_str();
        return source + ": reduced class [" + red + "]";
    });
}

}  // namespace

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts) {
    SuiteReport rep{name, opts.seed, {}};
    if (name == "group") {
        auto r = stream(opts, "corpus");
        const auto corpus = corpus_with_interior(r, 200);
        rep.checks.push_back(check_eg1());
        rep.checks.push_back(check_rank_law(opts, corpus));
        rep.checks.push_back(check_genus_zero(opts));
        rep.checks.push_back(check_pic0(corpus));
    } else if (name == "moves") {
        rep.checks.push_back(check_move_invariance(opts));
        rep.checks.push_back(check_domino(opts));
    } else if (name == "spectral") {
        rep.checks.push_back(check_catalog(opts));
        rep.checks.push_back(check_newton(opts));
        rep.checks.push_back(check_abel(opts));
        rep.checks.push_back(check_kasteleyn(opts));
    } else if (name == "appendix") {
        rep.checks.push_back(check_building_blocks(opts));
    } else {
        throw Error(ErrorCode::InvalidInput, "unknown suite \"" + name + "\"");
    }
    return rep;
}

}  // namespace dimercmg

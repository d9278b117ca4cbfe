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

// Command-line front end. Every command prints a short text summary, or with --json
// a report {"command", "inputs_digest", "results", "failed"}.
// Exit codes: 0 ok, 1 failed assertion, 2 input error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dimercmg/abel_spectral.hpp"
#include "dimercmg/error.hpp"
#include "dimercmg/json_io.hpp"
#include "dimercmg/modular_group.hpp"
#include "dimercmg/moves.hpp"
#include "dimercmg/verify.hpp"

using namespace dimercmg;

namespace {

struct Options {
    std::string polygon, graph, weights, script, catalog_dir, data_dir;
    std::vector<std::string> suites;
    std::uint64_t seed = 7;
    bool json = false, normalized = false, timing = false, as_given = false;
    std::vector<std::int64_t> by;
};

// FNV-1a over the command line and the bytes of every input file.
std::string digest(const std::string& command, const std::vector<std::string>& inputs) {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
        h = (h ^ 0xff) * 1099511628211ULL;
    };
    feed(command);
    for (const auto& in : inputs) {
        feed(in);
        std::ifstream f(in, std::ios::binary);
        if (f) feed(std::string(std::istreambuf_iterator<char>(f), {}));
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Report {
    std::string command;
    std::vector<std::string> inputs;
    Json results = Json::object();
    std::vector<std::string> failed;
    std::vector<std::string> text;
};

int emit(const Options& o, const Report& r) {
    if (o.json) {
        Json j{{"command", r.command},
               {"inputs_digest", digest(r.command, r.inputs)},
               {"results", r.results},
               {"failed", r.failed}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& line : r.text) std::cout << line << "\n";
        for (const auto& f : r.failed) std::cout << "FAILED: " << f << "\n";
    }
    return r.failed.empty() ? 0 : 1;
}

ConvexIntegralPolygon load_polygon(const Options& o) {
    if (o.polygon.empty()) throw Error(ErrorCode::InvalidInput, "--polygon is required");
    return polygon_from_json(read_json_file(o.polygon),
                             o.as_given ? StartPolicy::AsGiven : StartPolicy::LexicographicMin);
}

TorusGraph load_graph_opt(const Options& o) {
    if (o.graph.empty()) throw Error(ErrorCode::InvalidInput, "--graph is required");
    return load_graph(o.graph);
}

EdgeWeights load_weights(const Options& o, const TorusGraph& g) {
    if (o.weights.empty()) return unit_weights(g);
    return weights_from_json(read_json_file(o.weights));
}

MoveSequence load_script(const Options& o) {
    if (o.script.empty()) throw Error(ErrorCode::InvalidInput, "--script is required");
    return sequence_from_json(read_json_file(o.script), std::filesystem::path(o.script).parent_path());
}

std::string poly_str(const ConvexIntegralPolygon& p) {
    std::ostringstream s;
    for (auto v : p.vertices()) s << "(" << v.x << "," << v.y << ")";
    return s.str();
}

std::string vec_str(const IntVector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + "]";
}

std::string divisor_str(const Divisor& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + std::to_string(d[i]);
    return "[" + s + "]";
}

Json big(const Int& x) { return Json::parse(x.get_str()); }

Json rational_vector(const RationalVector& v) { return {rational_to_json(v.x), rational_to_json(v.y)}; }

Report polygon_info(const Options& o) {
    const auto p = load_polygon(o);
    Report r{"polygon info", {o.polygon}};
    Json edges = Json::array();
    for (const auto& e : edge_data(p))
        edges.push_back({{"vector", {e.edge_vector.x, e.edge_vector.y}},
                         {"multiplicity", e.multiplicity},
                         {"inward_normal", {e.inward_normal.x, e.inward_normal.y}}});
    const auto interior = interior_lattice_points(p).count;
    r.results = {{"polygon", polygon_to_json(p)},       {"edges", edges},
                 {"twice_area", twice_area(p)},         {"interior_points", interior},
                 {"boundary_points", boundary_lattice_count(p)}, {"building_block", is_building_block(p)}};
    r.text = {"vertices " + poly_str(p),
              std::to_string(p.size()) + " edges, twice area " + std::to_string(twice_area(p)) + ", " +
                  std::to_string(interior) + " interior and " + std::to_string(boundary_lattice_count(p)) +
                  " boundary lattice points"};
    return r;
}

Report group_compute(const Options& o) {
    const auto g = cluster_modular_group(load_polygon(o));
    Report r{"group compute", {o.polygon}};
    r.results = group_to_json(g.group);
    r.results["case"] = std::string(case_name(g.case_tag));
    r.results["genus"] = g.genus;
    r.text = {"G_N = " + g.group.to_string() + "  (" + std::string(case_name(g.case_tag)) + ", genus " +
              std::to_string(g.genus) + ")"};
    return r;
}

Report group_torsion_lattice(const Options& o) {
    const auto L = torsion_lattice(load_polygon(o));
    Report r{"group torsion-lattice", {o.polygon}};
    r.results = {{"basis", {rational_vector(L.basis[0]), rational_vector(L.basis[1])}},
                 {"denominators", {big(L.denominators[0]), big(L.denominators[1])}},
                 {"index", big(L.index)}};
    r.text = {"L = Z(" + L.basis[0].x.get_str() + "," + L.basis[0].y.get_str() + ") + Z(" + L.basis[1].x.get_str() +
                  "," + L.basis[1].y.get_str() + ")",
              "index over H_1: " + L.index.get_str()};
    return r;
}

Report group_max_translation(const Options& o) {
    const auto m = max_translation_polygon(load_polygon(o));
    Report r{"group max-translation-polygon", {o.polygon}};
    Json w = Json::array();
    std::string rows = "w:";
    for (const auto& c : m.w_coefficients) {
        w.push_back({big(c[0]), big(c[1])});
        rows += " (" + c[0].get_str() + "," + c[1].get_str() + ")";
    }
    r.results = {{"basis", {rational_vector(m.basis[0]), rational_vector(m.basis[1])}},
                 {"w", w},
                 {"polygon", polygon_to_json(m.polygon)}};
    r.text = {rows, "polygon " + poly_str(m.polygon)};
    return r;
}

Report group_pic0(const Options& o) {
    const auto p = pic0_stack_presentation(load_polygon(o));
    Report r{"group pic0", {o.polygon}};
    Json rel = Json::array();
    for (std::size_t c = 0; c < p.relations.cols(); ++c) rel.push_back(int_vector_to_json(p.relations.column(c)));
    r.results = {{"generators", p.generators}, {"relations", rel}, {"group", group_to_json(p.group)}};
    r.text = {"Pic0 = " + p.group.to_string() + " on " + std::to_string(p.generators.size()) + " generators"};
    return r;
}

Report bb_find(const Options& o) {
    const auto p = load_polygon(o);
    const auto d = find_building_block(p);
    Report r{"bb find", {o.polygon}};
    r.results = {{"building_block", polygon_to_json(d)}, {"lattice_points", lattice_points(d).size()}};
    r.text = {"building block " + poly_str(d)};
    if (!is_building_block(d) || !contains(p, d)) r.failed.push_back("result is not a building block inside P");
    return r;
}

Report graph_check(const Options& o) {
    const auto g = load_graph_opt(o);
    Report r{"graph check", {o.graph}};
    const auto n = newton_polygon(g);
    const auto m = check_minimality(g);
    Json zz = Json::array();
    for (const auto& z : zig_zag_paths(g))
        zz.push_back({{"class", {z.homology_class.x, z.homology_class.y}}, {"length", z.darts.size()}, {"edge", *z.edge_label}});
    r.results = {{"vertices", g.vertex_count()},
                 {"edges", g.edge_count()},
                 {"faces", g.faces().size()},
                 {"zigzags", zz},
                 {"newton_polygon", polygon_to_json(n)},
                 {"genus", interior_lattice_points(n).count},
                 {"minimal", m.minimal},
                 {"certificate", m.certificate}};
    r.text = {std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges, " +
                  std::to_string(g.faces().size()) + " faces, " + std::to_string(zz.size()) + " zig-zag paths",
              "Newton polygon " + poly_str(n) + ", genus " + std::to_string(interior_lattice_points(n).count),
              m.minimal ? "minimal" : "not minimal: " + m.certificate};
    return r;
}

Report graph_newton(const Options& o) {
    const auto n = newton_polygon(load_graph_opt(o));
    Report r{"graph newton", {o.graph}};
    r.results = polygon_to_json(n);
    r.text = {poly_str(n)};
    return r;
}

Report graph_export(const Options& o) {
    const auto g = load_graph_opt(o);
    Report r{"graph export", {o.graph}};
    r.results = graph_to_json(g);
    r.text = {graph_to_json(g).dump(2)};
    return r;
}

Json profile_json(const SequenceReport& s) {
    return {{"per_strand", s.profile.per_strand},
            {"g", int_vector_to_json(s.profile.per_edge)},
            {"reduced", int_vector_to_json(s.profile.reduced)},
            {"abel_shift", s.abel_shift},
            {"strand_permutation", s.strand_permutation}};
}

Report shuffle_apply(const Options& o) {
    const auto seq = load_script(o);
    const auto w = load_weights(o, seq.base);
    const auto s = run_sequence(seq, w);
    Report r{"shuffle apply", {o.script, o.weights}};
    r.results = profile_json(s);
    r.results["weights"] = weights_to_json(s.final_weights);
    r.text = {"g = " + vec_str(s.profile.per_edge) + ", reduced " + vec_str(s.profile.reduced)};
    for (const auto& [id, q] : s.final_weights) r.text.push_back("edge " + std::to_string(id) + ": " + q.get_str());
    return r;
}

Report shuffle_phi(const Options& o) {
    const auto seq = load_script(o);
    const auto s = run_sequence(seq, unit_weights(seq.base));
    const auto trivial = is_trivial(s.profile, newton_polygon(seq.base));
    Int sum = 0;
    for (const auto& v : s.profile.per_edge) sum += v;
    Report r{"shuffle phi", {o.script}};
    r.results = profile_json(s);
    r.results["sum_g"] = big(sum);
    r.results["trivial"] = trivial;
    r.text = {"g = " + vec_str(s.profile.per_edge) + " (sum " + sum.get_str() + ")",
              "reduced class " + vec_str(s.profile.reduced) + (trivial ? ", trivial" : ", nontrivial"),
              "Abel shift d(w0) - d_t(w0) = " + divisor_str(s.abel_shift)};
    if (sum != 0) r.failed.push_back("sum of g(E_rho) is " + sum.get_str());
    return r;
}

// Script generators print the script itself, so the output can be saved and replayed.
Report shuffle_domino(const Options&) {
    Report r{"shuffle domino", {}};
    r.results = sequence_to_json(square_lattice_domino_shuffle(), "square_lattice");
    r.text = {r.results.dump(2)};
    return r;
}

Report shuffle_translation(const Options& o) {
    const auto g = load_graph_opt(o);
    if (o.by.size() != 2) throw Error(ErrorCode::InvalidInput, "--by takes two integers");
    Report r{"shuffle translation", {o.graph}};
    const Json ref = std::filesystem::exists(o.graph) ? Json(graph_to_json(g)) : Json(o.graph);
    r.results = sequence_to_json(translation_sequence(g, {o.by[0], o.by[1]}), ref);
    r.text = {r.results.dump(2)};
    return r;
}

Report spectral_poly(const Options& o) {
    const auto g = load_graph_opt(o);
    auto p = kasteleyn_polynomial(g, load_weights(o, g));
    if (o.normalized) p = normalized_poly(p);
    Report r{"spectral poly", {o.graph, o.weights}};
    r.results = laurent_to_json(p);
    r.text = {p.to_string()};
    return r;
}

Report abel_map(const Options& o) {
    const auto g = load_graph_opt(o);
    const auto d = discrete_abel_map(g);
    Report r{"abel map", {o.graph}};
    Json labels = Json::array(), values = Json::object();
    for (const auto& c : d.classes) labels.push_back({c.x, c.y});
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        values[std::to_string(g.vertex_id(v))] = d.values[v];
        r.text.push_back(std::string(g.color(v) == Color::Black ? "b" : "w") + std::to_string(g.vertex_id(v)) + " " +
                         divisor_str(d.values[v]));
    }
    r.results = {{"base_white", g.vertex_id(d.base_white)}, {"zigzag_classes", labels}, {"values", values}};
    return r;
}

Report verify_all(const Options& o) {
    VerifyOptions vo;
    vo.seed = o.seed;
    if (!o.catalog_dir.empty()) vo.catalog_dir = o.catalog_dir;
    if (!o.data_dir.empty()) vo.data_dir = o.data_dir;
    auto suites = o.suites.empty() ? suite_names() : o.suites;
    Report r{"verify-all --seed " + std::to_string(o.seed), {}};
    for (const auto& s : suites) r.command += " --suite " + s;
    Json out = Json::array();
    for (const auto& name : suites) {
        const auto rep = run_suite(name, vo);
        Json checks = Json::array();
        for (const auto& c : rep.checks) {
            Json j{{"id", c.id}, {"description", c.description}, {"passed", c.passed}, {"detail", c.detail}};
            if (o.timing) j["seconds"] = c.seconds;
            checks.push_back(j);
            std::string line = (c.passed ? "PASS " : "FAIL ") + c.id + " " + c.description + ": " + c.detail;
            if (o.timing) line += " [" + std::to_string(c.seconds) + " s]";
            r.text.push_back(line);
            if (!c.passed) r.failed.push_back(name + "/" + c.id + ": " + c.detail);
        }
        out.push_back({{"suite", name}, {"seed", rep.seed}, {"passed", rep.passed()}, {"checks", checks}});
    }
    r.results = {{"suites", out}};
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster modular groups of dimer models"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c) { c->add_flag("--json", o.json, "Print a JSON report"); };
    auto polygon = [&](CLI::App* c) {
        c->add_option("--polygon", o.polygon, "Polygon JSON file")->required();
        c->add_flag("--as-given", o.as_given, "Keep the vertex order of the file");
        common(c);
    };
    auto graph = [&](CLI::App* c) {
        c->add_option("--graph", o.graph, "Graph JSON file or catalog name")->required();
        common(c);
    };
    std::function<Report(const Options&)> action;
    auto bind = [&](CLI::App* c, Report (*f)(const Options&)) { c->callback([&action, f] { action = f; }); };

    auto* poly_cmd = app.add_subcommand("polygon", "Polygon data")->require_subcommand(1);
    auto* info = poly_cmd->add_subcommand("info", "Edges, area and lattice points");
    polygon(info);
    bind(info, polygon_info);

    auto* group = app.add_subcommand("group", "Cluster modular group")->require_subcommand(1);
    for (auto [name, f] : std::vector<std::pair<const char*, Report (*)(const Options&)>>{
             {"compute", group_compute},
             {"torsion-lattice", group_torsion_lattice},
             {"max-translation-polygon", group_max_translation},
             {"pic0", group_pic0}}) {
        auto* c = group->add_subcommand(name);
        polygon(c);
        bind(c, f);
    }

    auto* graph_cmd = app.add_subcommand("graph", "Bipartite torus graphs")->require_subcommand(1);
    for (auto [name, f] : std::vector<std::pair<const char*, Report (*)(const Options&)>>{
             {"check", graph_check}, {"newton", graph_newton}, {"export", graph_export}}) {
        auto* c = graph_cmd->add_subcommand(name);
        graph(c);
        bind(c, f);
    }

    auto* shuffle = app.add_subcommand("shuffle", "Move scripts")->require_subcommand(1);
    auto* apply = shuffle->add_subcommand("apply", "Push weights through a script");
    apply->add_option("--script", o.script, "Move script JSON")->required();
    apply->add_option("--weights", o.weights, "Edge weights JSON (default: all 1)");
    common(apply);
    bind(apply, shuffle_apply);
    auto* phi = shuffle->add_subcommand("phi", "Translation profile and reduced class");
    phi->add_option("--script", o.script, "Move script JSON")->required();
    common(phi);
    bind(phi, shuffle_phi);

    auto* domino = shuffle->add_subcommand("domino", "Print the bundled square-lattice domino shuffle script");
    common(domino);
    bind(domino, shuffle_domino);
    auto* translate = shuffle->add_subcommand("translation", "Print a script closing by a pure translation");
    graph(translate);
    translate->add_option("--by", o.by, "Translation vector a b")->expected(2)->required();
    bind(translate, shuffle_translation);

    auto* spectral = app.add_subcommand("spectral", "Kasteleyn polynomial")->require_subcommand(1);
    auto* sp = spectral->add_subcommand("poly");
    graph(sp);
    sp->add_option("--weights", o.weights, "Edge weights JSON (default: all 1)");
    sp->add_flag("--normalized", o.normalized, "Divide by the leading coefficient and shift to the origin");
    bind(sp, spectral_poly);

    auto* abel = app.add_subcommand("abel", "Discrete Abel map")->require_subcommand(1);
    auto* am = abel->add_subcommand("map");
    graph(am);
    bind(am, abel_map);

    auto* bb = app.add_subcommand("bb", "Building blocks")->require_subcommand(1);
    auto* bf = bb->add_subcommand("find");
    polygon(bf);
    bind(bf, bb_find);

    auto* verify = app.add_subcommand("verify-all", "Run the verification suites");
    verify->add_option("--suite", o.suites, "group, moves, spectral, appendix (repeatable; default all)")
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--seed", o.seed, "Seed for the randomized suites");
    verify->add_option("--catalog", o.catalog_dir, "Directory of <name>.json graphs replacing the catalog");
    verify->add_option("--data", o.data_dir, "Data directory with scripts/domino.json");
    verify->add_flag("--timing", o.timing, "Include timings (reports are then not reproducible)");
    common(verify);
    bind(verify, verify_all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return emit(o, action(o));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

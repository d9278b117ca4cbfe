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

// Python bindings. Structured values cross the boundary as JSON text in the same
// formats as the CLI and the data files; the python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dimercmg/abel_spectral.hpp"
#include "dimercmg/error.hpp"
#include "dimercmg/json_io.hpp"
#include "dimercmg/modular_group.hpp"
#include "dimercmg/moves.hpp"
#include "dimercmg/verify.hpp"

namespace py = pybind11;
using namespace dimercmg;

namespace {

ConvexIntegralPolygon polygon(const std::string& text, bool as_given) {
    return polygon_from_json(Json::parse(text), as_given ? StartPolicy::AsGiven : StartPolicy::LexicographicMin);
}

// A catalog name, or graph JSON.
TorusGraph graph(const std::string& ref) {
    if (!ref.empty() && ref.front() == '{') return graph_from_json(Json::parse(ref));
    return catalog(ref).graph;
}

EdgeWeights weights(const TorusGraph& g, const std::string& text) {
    return text.empty() ? unit_weights(g) : weights_from_json(Json::parse(text));
}

Json rational_vector(const RationalVector& v) { return {rational_to_json(v.x), rational_to_json(v.y)}; }
Json big(const Int& x) { return Json::parse(x.get_str()); }

std::string group(const std::string& p, bool as_given) {
    const auto g = cluster_modular_group(polygon(p, as_given));
    auto j = group_to_json(g.group);
    j["case"] = std::string(case_name(g.case_tag));
    j["genus"] = g.genus;
    j["text"] = g.group.to_string();
    return j.dump();
}

std::string torsion(const std::string& p, bool as_given) {
    const auto L = torsion_lattice(polygon(p, as_given));
    return Json{{"basis", {rational_vector(L.basis[0]), rational_vector(L.basis[1])}}, {"index", big(L.index)}}.dump();
}

std::string max_translation(const std::string& p, bool as_given) {
    const auto m = max_translation_polygon(polygon(p, as_given));
    Json w = Json::array();
    for (const auto& c : m.w_coefficients) w.push_back({big(c[0]), big(c[1])});
    return Json{{"basis", {rational_vector(m.basis[0]), rational_vector(m.basis[1])}},
                {"w", w},
                {"polygon", polygon_to_json(m.polygon)}}
        .dump();
}

std::string pic0(const std::string& p, bool as_given) {
    return group_to_json(pic0_stack_presentation(polygon(p, as_given)).group).dump();
}

std::string info(const std::string& p, bool as_given) {
    const auto q = polygon(p, as_given);
    return Json{{"polygon", polygon_to_json(q)},
                {"twice_area", twice_area(q)},
                {"interior_points", interior_lattice_points(q).count},
                {"boundary_points", boundary_lattice_count(q)},
                {"building_block", is_building_block(q)}}
        .dump();
}

std::string building_block(const std::string& p) { return polygon_to_json(find_building_block(polygon(p, false))).dump(); }

std::string graph_summary(const std::string& ref) {
    const auto g = graph(ref);
    const auto n = newton_polygon(g);
    Json zz = Json::array();
    for (const auto& z : zig_zag_paths(g)) zz.push_back({z.homology_class.x, z.homology_class.y});
    const auto m = check_minimality(g);
    return Json{{"vertices", g.vertex_count()},
                {"edges", g.edge_count()},
                {"faces", g.faces().size()},
                {"zigzag_classes", zz},
                {"newton_polygon", polygon_to_json(n)},
                {"genus", interior_lattice_points(n).count},
                {"minimal", m.minimal}}
        .dump();
}

std::string spectral(const std::string& ref, const std::string& w, bool normalized) {
    const auto g = graph(ref);
    auto p = kasteleyn_polynomial(g, weights(g, w));
    return laurent_to_json(normalized ? normalized_poly(p) : p).dump();
}

std::string abel(const std::string& ref) {
    const auto g = graph(ref);
    const auto d = discrete_abel_map(g);
    Json values = Json::object(), classes = Json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) values[std::to_string(g.vertex_id(v))] = d.values[v];
    for (auto c : d.classes) classes.push_back({c.x, c.y});
    return Json{{"base_white", g.vertex_id(d.base_white)}, {"zigzag_classes", classes}, {"values", values}}.dump();
}

std::string run_script(const std::string& script, const std::string& w, const std::string& base_dir) {
    const auto seq = sequence_from_json(Json::parse(script), base_dir);
    const auto s = run_sequence(seq, weights(seq.base, w));
    Int sum = 0;
    for (const auto& v : s.profile.per_edge) sum += v;
    return Json{{"per_strand", s.profile.per_strand},
                {"g", int_vector_to_json(s.profile.per_edge)},
                {"reduced", int_vector_to_json(s.profile.reduced)},
                {"sum_g", big(sum)},
                {"abel_shift", s.abel_shift},
                {"trivial", is_trivial(s.profile, newton_polygon(seq.base))},
                {"weights", weights_to_json(s.final_weights)}}
        .dump();
}

std::string verify(const std::string& suite, std::uint64_t seed) {
    VerifyOptions opts;
    opts.seed = seed;
    const auto rep = run_suite(suite, opts);
    Json checks = Json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"id", c.id}, {"description", c.description}, {"passed", c.passed}, {"detail", c.detail}});
    return Json{{"suite", rep.suite}, {"seed", rep.seed}, {"passed", rep.passed()}, {"checks", checks}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cluster modular groups of dimer models (compiled core)";
    static py::exception<Error> error(m, "DimercmgError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, e.what());
        } catch (const Json::exception& e) {
            py::set_error(error, (std::string("InvalidInput: ") + e.what()).c_str());
        }
    });
    m.def("group", &group);
    m.def("torsion_lattice", &torsion);
    m.def("max_translation_polygon", &max_translation);
    m.def("pic0", &pic0);
    m.def("polygon_info", &info);
    m.def("building_block", &building_block);
    m.def("graph_summary", &graph_summary);
    m.def("graph_json", [](const std::string& ref) { return graph_to_json(graph(ref)).dump(); });
    m.def("catalog_names", &catalog_names);
    m.def("spectral", &spectral);
    m.def("abel", &abel);
    m.def("run_script", &run_script);
    m.def("domino_script", [] { return sequence_to_json(square_lattice_domino_shuffle(), "square_lattice").dump(); });
    m.def("translation_script", [](const std::string& ref, std::int64_t a, std::int64_t b) {
        const Json gref = !ref.empty() && ref.front() == '{' ? Json::parse(ref) : Json(ref);
        return sequence_to_json(translation_sequence(graph(ref), {a, b}), gref).dump();
    });
    m.def("suite_names", &suite_names);
    m.def("verify", &verify);
}

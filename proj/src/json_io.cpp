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

#include "dimercmg/json_io.hpp"

#include <fstream>

#include "dimercmg/error.hpp"

namespace dimercmg {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); }

std::int64_t key_id(const std::string& key) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != key.size()) bad("expected an integer id, got \"" + key + "\"");
    return v;
}

std::int64_t as_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) bad(what + " must be an integer");
    return j.get<std::int64_t>();
}

LatticeVector as_vector(const Json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2) bad(what + " must be a pair of integers");
    return {as_int(j[0], what), as_int(j[1], what)};
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

std::map<std::int64_t, std::int64_t> id_map(const Json& j, const std::string& what) {
    if (!j.is_object()) bad(what + " must be an object");
    std::map<std::int64_t, std::int64_t> m;
    for (auto it = j.begin(); it != j.end(); ++it) m[key_id(it.key())] = as_int(it.value(), what);
    return m;
}

Json id_map_to_json(const std::map<std::int64_t, std::int64_t>& m) {
    Json j = Json::object();
    for (auto [k, v] : m) j[std::to_string(k)] = v;
    return j;
}

Move move_from_json(const Json& j) {
    if (!j.is_object() || j.size() != 1) bad("a move is an object with one key");
    if (j.contains("spider")) return Move::spider(as_int(j["spider"], "spider face"));
    if (j.contains("contract")) return Move::contract(as_int(j["contract"], "contract vertex"));
    if (j.contains("expand")) {
        const auto& e = j["expand"];
        const auto count = as_int(field(e, "count"), "expand count");
        if (count < 0) bad("expand count must be nonnegative");
        return Move::expand(as_int(field(e, "vertex"), "expand vertex"), as_int(field(e, "edge"), "expand edge"),
                            static_cast<std::size_t>(count));
    }
    bad("unknown move " + j.dump());
}

Json move_to_json(const Move& m) {
    switch (m.kind) {
        case Move::Kind::Spider: return {{"spider", m.face}};
        case Move::Kind::Contract: return {{"contract", m.vertex}};
        case Move::Kind::Expand: return {{"expand", {{"vertex", m.vertex}, {"edge", m.edge}, {"count", m.count}}}};
    }
    return nullptr;
}

ClosingIsomorphism closing_from_json(const Json& j) {
    ClosingIsomorphism c;
    c.vertex_map = id_map(field(j, "vertex_map"), "vertex_map");
    c.edge_map = id_map(field(j, "edge_map"), "edge_map");
    if (j.contains("translation")) c.translation = as_vector(j["translation"], "translation");
    return c;
}

Json closing_to_json(const ClosingIsomorphism& c) {
    return {{"vertex_map", id_map_to_json(c.vertex_map)},
            {"edge_map", id_map_to_json(c.edge_map)},
            {"translation", {c.translation.x, c.translation.y}}};
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        bad(path.string() + ": " + e.what());
    }
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Int(std::to_string(j.get<std::int64_t>())));
    if (!j.is_string()) bad("rational must be a \"p/q\" string, got " + j.dump());
    Rational q;
    const auto s = j.get<std::string>();
    if (q.set_str(s, 10) != 0 || s.empty()) bad("malformed rational \"" + s + "\"");
    if (q.get_den() == 0) bad("zero denominator in \"" + s + "\"");
    q.canonicalize();
    return q;
}

Json rational_to_json(const Rational& q) { return q.get_str(); }

ConvexIntegralPolygon polygon_from_json(const Json& j, StartPolicy policy) {
    const Json& pts = j.is_array() ? j : field(j, "vertices");
    if (!pts.is_array()) bad("polygon vertices must be an array");
    std::vector<LatticeVector> v;
    for (const auto& p : pts) v.push_back(as_vector(p, "polygon vertex"));
    return validate_polygon(v, policy);
}

Json polygon_to_json(const ConvexIntegralPolygon& p) {
    Json pts = Json::array();
    for (auto v : p.vertices()) pts.push_back({v.x, v.y});
    return {{"vertices", pts}};
}

RawGraph raw_graph_from_json(const Json& j) {
    RawGraph raw;
    for (const auto& v : field(j, "vertices")) {
        const auto c = field(v, "color");
        if (!c.is_string()) bad("vertex color must be a string");
        const auto s = c.get<std::string>();
        Color color;
        if (s == "b" || s == "black") {
            color = Color::Black;
        } else if (s == "w" || s == "white") {
            color = Color::White;
        } else {
            bad("unknown color \"" + s + "\"");
        }
        raw.vertices.push_back({as_int(field(v, "id"), "vertex id"), color});
    }
    for (const auto& e : field(j, "edges"))
        raw.edges.push_back({as_int(field(e, "id"), "edge id"), as_int(field(e, "black"), "black endpoint"),
                             as_int(field(e, "white"), "white endpoint"), as_vector(field(e, "disp"), "disp")});
    const auto& rot = field(j, "rotations");
    if (!rot.is_object()) bad("rotations must be an object keyed by vertex id");
    for (auto it = rot.begin(); it != rot.end(); ++it) {
        std::vector<std::int64_t> ids;
        for (const auto& e : it.value()) ids.push_back(as_int(e, "rotation entry"));
        raw.rotations[key_id(it.key())] = std::move(ids);
    }
    return raw;
}

TorusGraph graph_from_json(const Json& j) { return validate_graph(raw_graph_from_json(j)); }

Json graph_to_json(const TorusGraph& g) {
    Json vs = Json::array(), es = Json::array(), rot = Json::object();
    for (const auto& v : g.raw().vertices) vs.push_back({{"id", v.id}, {"color", v.color == Color::Black ? "b" : "w"}});
    for (const auto& e : g.raw().edges)
        es.push_back({{"id", e.id}, {"black", e.black}, {"white", e.white}, {"disp", {e.disp.x, e.disp.y}}});
    for (const auto& [id, r] : g.raw().rotations) rot[std::to_string(id)] = r;
    return {{"vertices", vs}, {"edges", es}, {"rotations", rot}};
}

TorusGraph load_graph(const std::string& name_or_path) {
    if (!std::filesystem::exists(name_or_path)) return catalog(name_or_path).graph;
    return graph_from_json(read_json_file(name_or_path));
}

EdgeWeights weights_from_json(const Json& j) {
    const Json& obj = j.is_object() && j.contains("weights") ? j["weights"] : j;
    if (!obj.is_object()) bad("weights must be an object keyed by edge id");
    EdgeWeights w;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const auto q = rational_from_json(it.value());
        if (q == 0) bad("zero weight on edge " + it.key());
        w[key_id(it.key())] = q;
    }
    return w;
}

Json weights_to_json(const EdgeWeights& w) {
    Json j = Json::object();
    for (const auto& [id, q] : w) j[std::to_string(id)] = rational_to_json(q);
    return j;
}

MoveSequence sequence_from_json(const Json& j, const std::filesystem::path& base_dir) {
    const auto& gref = field(j, "graph");
    MoveSequence seq;
    if (gref.is_object()) {
        seq.base = graph_from_json(gref);
    } else if (gref.is_string()) {
        const auto s = gref.get<std::string>();
        const auto path = base_dir / s;
        seq.base = std::filesystem::exists(path) ? graph_from_json(read_json_file(path)) : catalog(s).graph;
    } else {
        bad("\"graph\" must be a catalog name, a file or a graph object");
    }
    auto segment = [](const Json& s) {
        Segment seg;
        if (s.contains("moves"))
            for (const auto& m : s["moves"]) seg.moves.push_back(move_from_json(m));
        seg.closing = closing_from_json(field(s, "closing"));
        return seg;
    };
    if (j.contains("segments")) {
        for (const auto& s : j["segments"]) seq.segments.push_back(segment(s));
    } else {
        seq.segments.push_back(segment(j));
    }
    return seq;
}

Json sequence_to_json(const MoveSequence& s, const Json& graph_ref) {
    Json segs = Json::array();
    for (const auto& seg : s.segments) {
        Json moves = Json::array();
        for (const auto& m : seg.moves) moves.push_back(move_to_json(m));
        segs.push_back({{"moves", moves}, {"closing", closing_to_json(seg.closing)}});
    }
    if (segs.size() == 1) {
        Json out = segs[0];
        out["graph"] = graph_ref;
        return out;
    }
    return {{"graph", graph_ref}, {"segments", segs}};
}

Json group_to_json(const FgAbelianGroup& g) {
    Json t = Json::array();
    for (const auto& d : g.torsion) t.push_back(Json::parse(d.get_str()));
    return {{"rank", g.rank}, {"torsion", t}};
}

Json int_vector_to_json(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(Json::parse(x.get_str()));
    return out;
}

Json laurent_to_json(const LaurentPoly2& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"z", e.first}, {"w", e.second}, {"coeff", rational_to_json(c)}});
    return {{"terms", terms}};
}

}  // namespace dimercmg

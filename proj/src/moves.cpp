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

#include "dimercmg/moves.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "dimercmg/error.hpp"
#include "dimercmg/modular_group.hpp"

namespace dimercmg {

std::string describe(const Move& m) {
    switch (m.kind) {
        case Move::Kind::Spider: return "spider(face " + std::to_string(m.face) + ")";
        case Move::Kind::Contract: return "contract(vertex " + std::to_string(m.vertex) + ")";
        case Move::Kind::Expand:
            return "expand(vertex " + std::to_string(m.vertex) + ", edge " + std::to_string(m.edge) + ", count " +
                   std::to_string(m.count) + ")";
    }
    return "?";
}

namespace {

Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }

Rational weight_of(const EdgeWeights& w, std::int64_t id) {
    auto it = w.find(id);
    if (it == w.end()) throw Error(ErrorCode::InvalidInput, "missing weight for edge " + std::to_string(id));
    return it->second;
}

void erase_edges(RawGraph& raw, const std::set<std::int64_t>& ids) {
    std::erase_if(raw.edges, [&](const RawGraph::Edge& e) { return ids.count(e.id) > 0; });
}

RawGraph::Edge& raw_edge(RawGraph& raw, std::int64_t id) {
    for (auto& e : raw.edges)
        if (e.id == id) return e;
    throw Error(ErrorCode::InvalidGraph, "no edge " + std::to_string(id));
}

// Edge between u (at translation 0) and v (at translation t), stored black -> white.
RawGraph::Edge make_edge(std::int64_t id, std::int64_t u, Color cu, std::int64_t v, LatticeVector t) {
    if (cu == Color::Black) return {id, u, v, t};
    return {id, v, u, -t};
}

// Face of g' containing some dart that survived from face f of g.
std::optional<std::size_t> surviving_face(const TorusGraph& g, const TorusGraph& h, std::size_t f) {
    for (auto d : g.faces()[f].darts) {
        auto e = h.find_edge(g.edge_id(TorusGraph::edge_of(d)));
        if (!e) continue;
        // Colors are preserved, so the dart direction is too.
        return h.face_of_dart(2 * *e + d % 2);
    }
    return std::nullopt;
}

}  // namespace

MoveResult spider_move(const TorusGraph& g, const EdgeWeights& w, std::size_t face) {
    if (face >= g.faces().size()) throw Error(ErrorCode::InvalidInput, "no face " + std::to_string(face));
    const auto& darts = g.faces()[face].darts;
    if (darts.size() != 4)
        throw Error(ErrorCode::NotQuadFace, "face " + std::to_string(face) + " has " +
                                                std::to_string(darts.size()) + " sides");
    std::array<std::size_t, 4> v{}, e{};
    std::array<LatticeVector, 4> lift{};
    for (std::size_t i = 0; i < 4; ++i) {
        v[i] = g.tail(darts[i]);
        e[i] = TorusGraph::edge_of(darts[i]);
        if (i > 0) lift[i] = lift[i - 1] + g.dart_disp(darts[i - 1]);
        if (i > 0 && g.color(v[i]) == g.color(v[i - 1]))
            throw Error(ErrorCode::WrongColorPattern, "face corners do not alternate in color");
    }
    if (std::set<std::size_t>(e.begin(), e.end()).size() != 4)
        throw Error(ErrorCode::MoveNotApplicable, "face " + std::to_string(face) + " repeats an edge");

    std::array<Rational, 4> a;
    for (std::size_t i = 0; i < 4; ++i) a[i] = weight_of(w, g.edge_id(e[i]));
    const Rational delta = a[0] * a[2] + a[1] * a[3];

    RawGraph raw = g.raw();
    auto next_v = static_cast<std::int64_t>(g.next_vertex_id());
    auto next_e = static_cast<std::int64_t>(g.next_edge_id());
    std::array<std::int64_t, 4> n{}, pend{}, quad{};
    for (std::size_t i = 0; i < 4; ++i) {
        n[i] = next_v++;
        raw.vertices.push_back({n[i], opposite(g.color(v[i]))});
    }
    for (std::size_t i = 0; i < 4; ++i) pend[i] = next_e++;
    for (std::size_t i = 0; i < 4; ++i) quad[i] = next_e++;

    // New vertices share the frame of v[0]; the corner v[i] sits at lift[i] in it.
    erase_edges(raw, {g.edge_id(e[0]), g.edge_id(e[1]), g.edge_id(e[2]), g.edge_id(e[3])});
    EdgeWeights out = w;
    for (std::size_t i = 0; i < 4; ++i) {
        out.erase(g.edge_id(e[i]));
        raw.edges.push_back(make_edge(pend[i], g.vertex_id(v[i]), g.color(v[i]), n[i], -lift[i]));
        raw.edges.push_back(make_edge(quad[i], n[i], opposite(g.color(v[i])), n[(i + 1) % 4], {0, 0}));
        out[pend[i]] = Rational(1);
        out[quad[i]] = a[(i + 2) % 4] / delta;
    }
    for (std::size_t i = 0; i < 4; ++i) {
        // At the corner, e[i] directly precedes e[i-1] counterclockwise; both become the pendant.
        auto& rot = raw.rotations[g.vertex_id(v[i])];
        const auto in = g.edge_id(e[(i + 3) % 4]), outgoing = g.edge_id(e[i]);
        const std::size_t k = rot.size();
        std::size_t pos = k;
        for (std::size_t j = 0; j < k; ++j)
            if (rot[j] == outgoing && rot[(j + 1) % k] == in) pos = j;
        if (pos == k) throw Error(ErrorCode::MoveNotApplicable, "face corner is not a rotation corner");
        rot[pos] = pend[i];
        rot.erase(rot.begin() + static_cast<std::ptrdiff_t>((pos + 1) % k));
        raw.rotations[n[i]] = {quad[i], quad[(i + 3) % 4], pend[i]};
    }

    MoveResult r{validate_graph(std::move(raw)), std::move(out), {}};
    const auto& h = r.graph;
    const auto qi = h.edge_index(quad[0]);
    const auto inner_dart = h.dart_from(h.vertex_index(n[0]), qi);
    for (std::size_t f = 0; f < g.faces().size(); ++f) {
        if (f == face) {
            r.face_map[f] = h.face_of_dart(inner_dart);
            continue;
        }
        if (auto nf = surviving_face(g, h, f)) r.face_map[f] = *nf;
    }
    // Faces across the removed edges, in case they kept no dart of their own.
    for (std::size_t i = 0; i < 4; ++i) {
        const auto across = g.face_of_dart(TorusGraph::reverse(darts[i]));
        if (r.face_map.count(across)) continue;
        const auto q = h.edge_index(quad[i]);
        r.face_map[across] = h.face_of_dart(h.dart_from(h.vertex_index(n[(i + 1) % 4]), q));
    }
    return r;
}

MoveResult contract_vertex(const TorusGraph& g, const EdgeWeights& w, std::int64_t vertex) {
    const auto u = g.vertex_index(vertex);
    if (g.degree(u) != 2)
        throw Error(ErrorCode::NotTwoValent, "vertex " + std::to_string(vertex) + " has degree " +
                                                 std::to_string(g.degree(u)));
    const auto e1 = g.rotation(u)[0], e2 = g.rotation(u)[1];
    const auto d1 = g.dart_from(u, e1), d2 = g.dart_from(u, e2);
    const auto x1 = g.head(d1), x2 = g.head(d2);
    if (x1 == x2)
        throw Error(ErrorCode::MoveNotApplicable, "both edges of vertex " + std::to_string(vertex) +
                                                      " end at the same vertex");
    const auto id1 = g.vertex_id(x1), id2 = g.vertex_id(x2);

    // Gauge at x2 so that the path x1 - u - x2 carries weight 1.
    const Rational lambda = weight_of(w, g.edge_id(e1)) / weight_of(w, g.edge_id(e2));
    EdgeWeights out = w;
    for (auto e : g.rotation(x2)) out[g.edge_id(e)] *= lambda;
    out.erase(g.edge_id(e1));
    out.erase(g.edge_id(e2));

    // x2's representative becomes x1's copy at translation shift.
    const LatticeVector shift = g.dart_disp(d1) - g.dart_disp(d2);
    RawGraph raw = g.raw();
    const bool x1_black = g.color(x1) == Color::Black;
    for (auto e : g.rotation(x2)) {
        if (e == e2) continue;
        auto& re = raw_edge(raw, g.edge_id(e));
        if (x1_black) {
            re.black = id1;
            re.disp = re.disp - shift;
        } else {
            re.white = id1;
            re.disp = re.disp + shift;
        }
    }
    auto cut_after = [&](std::size_t x, std::size_t e) {
        std::vector<std::int64_t> seq;
        const auto& rot = g.rotation(x);
        const auto p = g.rotation_position(g.dart_from(x, e));
        for (std::size_t j = 1; j < rot.size(); ++j) seq.push_back(g.edge_id(rot[(p + j) % rot.size()]));
        return seq;
    };
    auto merged = cut_after(x1, e1);
    auto tail2 = cut_after(x2, e2);
    merged.insert(merged.end(), tail2.begin(), tail2.end());
    raw.rotations[id1] = merged;
    raw.rotations.erase(id2);
    raw.rotations.erase(vertex);
    erase_edges(raw, {g.edge_id(e1), g.edge_id(e2)});
    std::erase_if(raw.vertices, [&](const RawGraph::Vertex& x) { return x.id == vertex || x.id == id2; });

    MoveResult r{validate_graph(std::move(raw)), std::move(out), {}};
    for (std::size_t f = 0; f < g.faces().size(); ++f)
        if (auto nf = surviving_face(g, r.graph, f)) r.face_map[f] = *nf;
    return r;
}

MoveResult expand_vertex(const TorusGraph& g, const EdgeWeights& w, std::int64_t vertex, std::int64_t edge,
                         std::size_t count) {
    const auto v = g.vertex_index(vertex);
    const auto& rot = g.rotation(v);
    const auto e = g.edge_index(edge);
    if (std::find(rot.begin(), rot.end(), e) == rot.end())
        throw Error(ErrorCode::MoveNotApplicable, "edge " + std::to_string(edge) + " is not at vertex " +
                                                      std::to_string(vertex));
    if (count == 0 || count >= rot.size())
        throw Error(ErrorCode::MoveNotApplicable, "block size must lie in [1, degree - 1]");
    const auto p = g.rotation_position(g.dart_from(v, e));
    // A loop edge would sit twice in the rotation; the split is ambiguous.
    if (g.black(e) == g.white(e)) throw Error(ErrorCode::MoveNotApplicable, "cannot split at a loop");

    RawGraph raw = g.raw();
    const auto nv = static_cast<std::int64_t>(g.next_vertex_id());
    const auto mid = nv + 1;
    const auto ea = static_cast<std::int64_t>(g.next_edge_id());
    const auto eb = ea + 1;
    const Color c = g.color(v);
    raw.vertices.push_back({nv, c});
    raw.vertices.push_back({mid, opposite(c)});
    raw.edges.push_back(make_edge(ea, vertex, c, mid, {0, 0}));
    raw.edges.push_back(make_edge(eb, nv, c, mid, {0, 0}));

    std::vector<std::int64_t> block, rest{ea};
    for (std::size_t j = 0; j < rot.size(); ++j) {
        const auto id = g.edge_id(rot[(p + j) % rot.size()]);
        (j < count ? block : rest).push_back(id);
    }
    for (std::size_t j = 0; j < count; ++j) {
        auto& re = raw_edge(raw, block[j]);
        (c == Color::Black ? re.black : re.white) = nv;
    }
    block.push_back(eb);
    raw.rotations[vertex] = rest;
    raw.rotations[nv] = block;
    raw.rotations[mid] = {ea, eb};

    EdgeWeights out = w;
    out[ea] = Rational(1);
    out[eb] = Rational(1);
    MoveResult r{validate_graph(std::move(raw)), std::move(out), {}};
    for (std::size_t f = 0; f < g.faces().size(); ++f)
        if (auto nf = surviving_face(g, r.graph, f)) r.face_map[f] = *nf;
    return r;
}

MoveResult apply_move(const TorusGraph& g, const EdgeWeights& w, const Move& m) {
    switch (m.kind) {
        case Move::Kind::Spider:
            if (m.face < 0) throw Error(ErrorCode::InvalidInput, "negative face index");
            return spider_move(g, w, static_cast<std::size_t>(m.face));
        case Move::Kind::Contract: return contract_vertex(g, w, m.vertex);
        case Move::Kind::Expand: return expand_vertex(g, w, m.vertex, m.edge, m.count);
    }
    throw Error(ErrorCode::InvalidInput, "unknown move");
}

namespace {

Rational rpow(const Rational& x, std::int64_t k) {
    Rational r(1);
    const Rational b = k >= 0 ? x : Rational(1) / x;
    for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) r *= b;
    return r;
}

}  // namespace

std::vector<Rational> mutate_x(const IntMatrix& epsilon, const std::vector<Rational>& x, std::size_t k) {
    if (k >= x.size() || epsilon.rows() != x.size())
        throw Error(ErrorCode::DimensionMismatch, "mutation index or matrix size");
    std::vector<Rational> y = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i == k) continue;
        const auto eik = epsilon(i, k).get_si();
        if (eik == 0) continue;
        y[i] = x[i] * rpow(Rational(1) + rpow(x[k], eik > 0 ? 1 : -1), eik);
    }
    y[k] = Rational(1) / x[k];
    return y;
}

std::vector<Rational> mutate_x_one_line(const IntMatrix& epsilon, const std::vector<Rational>& x, std::size_t k) {
    if (k >= x.size() || epsilon.rows() != x.size())
        throw Error(ErrorCode::DimensionMismatch, "mutation index or matrix size");
    std::vector<Rational> y = x;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (i != k) y[i] = x[i] * rpow(Rational(1) + x[k], epsilon(i, k).get_si());
    y[k] = Rational(1) / x[k];
    return y;
}

IntMatrix mutate_epsilon(const IntMatrix& epsilon, std::size_t k) {
    IntMatrix out = epsilon;
    const std::size_t n = epsilon.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == k || j == k) {
                out(i, j) = -epsilon(i, j);
                continue;
            }
            const Int a = epsilon(i, k), b = epsilon(k, j);
            if (a > 0 && b > 0) out(i, j) += a * b;
            if (a < 0 && b < 0) out(i, j) -= a * b;
        }
    return out;
}

std::map<std::int64_t, LatticeVector> verify_closing(const TorusGraph& final_graph, const TorusGraph& base,
                                                     const ClosingIsomorphism& c) {
    auto fail = [](const std::string& msg) { throw Error(ErrorCode::ClosingIsomorphismInvalid, msg); };
    const auto& fg = final_graph;
    if (c.vertex_map.size() != fg.vertex_count() || c.edge_map.size() != fg.edge_count() ||
        fg.vertex_count() != base.vertex_count() || fg.edge_count() != base.edge_count())
        fail("maps do not cover both graphs");
    std::vector<std::size_t> vimg(fg.vertex_count()), eimg(fg.edge_count());
    std::set<std::size_t> vseen, eseen;
    for (auto [from, to] : c.vertex_map) {
        auto a = fg.find_vertex(from);
        auto b = base.find_vertex(to);
        if (!a || !b) fail("unknown vertex in vertex map: " + std::to_string(from) + " -> " + std::to_string(to));
        if (fg.color(*a) != base.color(*b)) fail("vertex " + std::to_string(from) + " changes color");
        if (!vseen.insert(*b).second) fail("vertex map is not injective");
        vimg[*a] = *b;
    }
    for (auto [from, to] : c.edge_map) {
        auto a = fg.find_edge(from);
        auto b = base.find_edge(to);
        if (!a || !b) fail("unknown edge in edge map: " + std::to_string(from) + " -> " + std::to_string(to));
        if (!eseen.insert(*b).second) fail("edge map is not injective");
        eimg[*a] = *b;
        if (base.black(*b) != vimg[fg.black(*a)] || base.white(*b) != vimg[fg.white(*a)])
            fail("edge " + std::to_string(from) + " endpoints are not mapped to those of edge " + std::to_string(to));
    }
    for (std::size_t v = 0; v < fg.vertex_count(); ++v) {
        const auto& r = fg.rotation(v);
        const auto& rb = base.rotation(vimg[v]);
        if (r.size() != rb.size()) fail("degree mismatch at vertex " + std::to_string(fg.vertex_id(v)));
        const auto start = base.rotation_position(base.dart_from(vimg[v], eimg[r[0]]));
        for (std::size_t j = 0; j < r.size(); ++j)
            if (eimg[r[j]] != rb[(start + j) % rb.size()])
                fail("rotation not preserved at vertex " + std::to_string(fg.vertex_id(v)));
    }
    // Offsets: disp(sigma e) = disp(e) + t(white) - t(black).
    std::size_t root = 0;
    for (std::size_t v = 1; v < fg.vertex_count(); ++v)
        if (fg.vertex_id(v) < fg.vertex_id(root)) root = v;
    std::vector<std::optional<LatticeVector>> s(fg.vertex_count());
    s[root] = LatticeVector{0, 0};
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto e : fg.rotation(v)) {
            const auto delta = base.disp(eimg[e]) - fg.disp(e);
            const bool at_black = fg.black(e) == v;
            const auto u = at_black ? fg.white(e) : fg.black(e);
            const auto su = at_black ? *s[v] + delta : *s[v] - delta;
            if (!s[u]) {
                s[u] = su;
                queue.push_back(u);
            } else if (*s[u] != su) {
                fail("displacements are not compatible with a translation (homology is not preserved)");
            }
        }
    }
    std::map<std::int64_t, LatticeVector> t;
    for (std::size_t v = 0; v < fg.vertex_count(); ++v) t[fg.vertex_id(v)] = c.translation + *s[v];
    return t;
}

std::vector<ClosingIsomorphism> find_isomorphisms(const TorusGraph& from, const TorusGraph& to) {
    std::vector<ClosingIsomorphism> out;
    if (from.vertex_count() != to.vertex_count() || from.edge_count() != to.edge_count() || from.dart_count() == 0)
        return out;
    const std::size_t n = from.dart_count();
    auto rotate = [](const TorusGraph& g, std::size_t d) { return g.face_next(TorusGraph::reverse(d)); };
    for (std::size_t start = 0; start < n; start += 2) {
        // Dart 0 runs black -> white; only such darts are candidates.
        std::vector<std::size_t> img(n, n), pre(n, n);
        std::vector<std::size_t> stack{0};
        img[0] = start;
        pre[start] = 0;
        bool ok = true;
        while (ok && !stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            const auto y = img[x];
            for (auto [x2, y2] : {std::pair{TorusGraph::reverse(x), TorusGraph::reverse(y)},
                                  std::pair{rotate(from, x), rotate(to, y)}}) {
                if (img[x2] == n && pre[y2] == n) {
                    img[x2] = y2;
                    pre[y2] = x2;
                    stack.push_back(x2);
                } else if (img[x2] != y2) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok || std::count(img.begin(), img.end(), n) > 0) continue;
        ClosingIsomorphism c;
        for (std::size_t d = 0; d < n && ok; ++d) {
            if (d % 2 != img[d] % 2) ok = false;
            const auto a = from.vertex_id(from.tail(d)), b = to.vertex_id(to.tail(img[d]));
            auto [it, inserted] = c.vertex_map.emplace(a, b);
            if (!inserted && it->second != b) ok = false;
            c.edge_map[from.edge_id(TorusGraph::edge_of(d))] = to.edge_id(TorusGraph::edge_of(img[d]));
        }
        if (!ok) continue;
        try {
            verify_closing(from, to, c);
        } catch (const Error&) {
            continue;
        }
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

struct TrackState {
    TorusGraph graph;
    EdgeWeights weights;
    std::vector<std::size_t> label;        // zig-zag index -> base label
    std::map<std::int64_t, Divisor> abel;  // vertex id -> divisor over base labels
};

std::vector<std::size_t> match_strands(const TorusGraph& old_g, const std::vector<std::size_t>& old_label,
                                       const TorusGraph& new_g) {
    std::vector<std::size_t> out(new_g.zigzags().size());
    std::set<std::size_t> used;
    for (std::size_t z = 0; z < new_g.zigzags().size(); ++z) {
        std::set<std::size_t> cand;
        for (auto d : new_g.zigzags()[z].darts) {
            auto e = old_g.find_edge(new_g.edge_id(TorusGraph::edge_of(d)));
            if (e) cand.insert(old_label[old_g.zigzag_of_dart(2 * *e + d % 2)]);
        }
        if (cand.size() != 1)
            throw Error(ErrorCode::StrandMatchAmbiguous, "zig-zag path " + std::to_string(z) + " matches " +
                                                             std::to_string(cand.size()) + " old strands");
        out[z] = *cand.begin();
        if (!used.insert(out[z]).second)
            throw Error(ErrorCode::StrandMatchAmbiguous, "two zig-zag paths continue the same strand");
    }
    return out;
}

std::map<std::int64_t, Divisor> by_id(const TorusGraph& g, const std::vector<Divisor>& values) {
    std::map<std::int64_t, Divisor> m;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) m[g.vertex_id(v)] = values[v];
    return m;
}

}  // namespace

SequenceReport run_sequence(const MoveSequence& seq, const EdgeWeights& w) {
    const TorusGraph& base = seq.base;
    std::vector<LatticeVector> classes;
    for (const auto& z : base.zigzags()) classes.push_back(z.homology_class);
    SequenceReport rep;
    for (std::size_t v = 0; v < base.vertex_count(); ++v)
        if (base.color(v) == Color::White) {
            rep.base_white = v;
            break;
        }
    const auto initial = discrete_abel_map(base, rep.base_white);

    TrackState st{base, w, {}, by_id(base, initial.values)};
    for (std::size_t z = 0; z < classes.size(); ++z) st.label.push_back(z);

    for (const auto& seg : seq.segments) {
        for (const auto& m : seg.moves) {
            auto r = apply_move(st.graph, st.weights, m);
            auto label = match_strands(st.graph, st.label, r.graph);
            for (std::size_t z = 0; z < label.size(); ++z)
                if (r.graph.zigzags()[z].homology_class != classes[label[z]])
                    throw Error(ErrorCode::StrandMatchAmbiguous, "strand changed its homology class");
            std::map<std::size_t, Divisor> seeds;
            for (std::size_t v = 0; v < r.graph.vertex_count(); ++v) {
                auto it = st.abel.find(r.graph.vertex_id(v));
                if (it != st.abel.end()) seeds[v] = it->second;
            }
            auto abel = by_id(r.graph, propagate_abel(r.graph, label, classes, seeds));
            st = TrackState{std::move(r.graph), std::move(r.weights), std::move(label), std::move(abel)};
        }
        // Transport everything onto the base graph.
        const auto t = verify_closing(st.graph, base, seg.closing);
        EdgeWeights wb;
        for (auto [from, to] : seg.closing.edge_map) wb[to] = st.weights.at(from);
        std::map<std::size_t, Divisor> seeds;
        for (auto [from, to] : seg.closing.vertex_map)
            seeds[base.vertex_index(to)] = st.abel.at(from) - div_character(classes, t.at(from));
        std::vector<std::size_t> label(base.zigzags().size());
        for (std::size_t z = 0; z < label.size(); ++z) {
            const auto d = base.zigzags()[z].darts.front();
            std::int64_t pre_id = 0;
            for (auto [from, to] : seg.closing.edge_map)
                if (to == base.edge_id(TorusGraph::edge_of(d))) pre_id = from;
            const auto e = st.graph.edge_index(pre_id);
            label[z] = st.label[st.graph.zigzag_of_dart(2 * e + d % 2)];
        }
        auto abel = by_id(base, propagate_abel(base, label, classes, seeds));
        st = TrackState{base, std::move(wb), std::move(label), std::move(abel)};
    }

    rep.final_weights = st.weights;
    rep.abel_shift = initial.values[rep.base_white] - st.abel.at(base.vertex_id(rep.base_white));
    rep.strand_permutation.assign(classes.size(), 0);
    for (std::size_t z = 0; z < st.label.size(); ++z) rep.strand_permutation[st.label[z]] = static_cast<std::int64_t>(z);

    const auto newton = newton_polygon(base);
    const auto labels = zigzag_edge_labels(base, newton);
    rep.profile.per_strand = rep.abel_shift;
    rep.profile.per_edge.assign(newton.vertices().size(), Int(0));
    for (std::size_t z = 0; z < labels.size(); ++z) rep.profile.per_edge[labels[z]] += rep.abel_shift[z];
    rep.profile.reduced = reduce_mod_image(rep.profile.per_edge, build_j(newton).B);
    return rep;
}

IntVector psi(const MoveSequence& seq) { return run_sequence(seq, unit_weights(seq.base)).profile.reduced; }

bool is_trivial(const TranslationProfile& profile, const ConvexIntegralPolygon& newton) {
    if (interior_lattice_points(newton).count > 0) {
        return std::all_of(profile.reduced.begin(), profile.reduced.end(), [](const Int& x) { return x == 0; });
    }
    const auto data = edge_data(newton);
    for (std::size_t i = 0; i < data.size(); ++i)
        if (profile.per_edge[i] % data[i].multiplicity != 0) return false;
    return true;
}

bool is_trivial(const MoveSequence& seq) {
    return is_trivial(run_sequence(seq, unit_weights(seq.base)).profile, newton_polygon(seq.base));
}

MoveSequence concatenate(const MoveSequence& a, const MoveSequence& b) {
    bool same = a.base.edge_count() == b.base.edge_count() && a.base.vertex_count() == b.base.vertex_count();
    for (std::size_t e = 0; same && e < a.base.edge_count(); ++e) {
        const auto& x = a.base.raw().edges[e];
        const auto& y = b.base.raw().edges[e];
        same = x.id == y.id && x.black == y.black && x.white == y.white && x.disp == y.disp;
    }
    if (!same)
        throw Error(ErrorCode::InvalidInput, "sequences live on different base graphs");
    MoveSequence out = a;
    out.segments.insert(out.segments.end(), b.segments.begin(), b.segments.end());
    return out;
}

MoveSequence translation_sequence(const TorusGraph& base, LatticeVector m) {
    ClosingIsomorphism c;
    for (std::size_t v = 0; v < base.vertex_count(); ++v) c.vertex_map[base.vertex_id(v)] = base.vertex_id(v);
    for (std::size_t e = 0; e < base.edge_count(); ++e) c.edge_map[base.edge_id(e)] = base.edge_id(e);
    c.translation = m;
    return {base, {Segment{{}, c}}};
}

MoveSequence square_lattice_domino_shuffle() {
    const TorusGraph base = catalog("square_lattice").graph;
    // Face 0 and the face sharing no edge with it.
    std::set<std::size_t> first;
    for (auto d : base.faces()[0].darts) first.insert(TorusGraph::edge_of(d));
    std::size_t other = 0;
    for (std::size_t f = 1; f < base.faces().size(); ++f) {
        bool shares = false;
        for (auto d : base.faces()[f].darts) shares |= first.count(TorusGraph::edge_of(d)) > 0;
        if (!shares) other = f;
    }
    Segment seg;
    auto r = spider_move(base, unit_weights(base), 0);
    seg.moves.push_back(Move::spider(0));
    const auto other_now = r.face_map.at(other);
    r = spider_move(r.graph, r.weights, other_now);
    seg.moves.push_back(Move::spider(static_cast<std::int64_t>(other_now)));
    for (std::size_t v = 0; v < base.vertex_count(); ++v) {
        r = contract_vertex(r.graph, r.weights, base.vertex_id(v));
        seg.moves.push_back(Move::contract(base.vertex_id(v)));
    }

    Divisor target(base.zigzags().size(), 0);
    for (std::size_t z = 0; z < target.size(); ++z) {
        const auto c = base.zigzags()[z].homology_class;
        if (c == LatticeVector{-1, -1}) target[z] = 1;
        if (c == LatticeVector{-1, 1}) target[z] = -1;
    }
    for (auto& c : find_isomorphisms(r.graph, base)) {
        seg.closing = c;
        MoveSequence seq{base, {seg}};
        if (run_sequence(seq, unit_weights(base)).abel_shift == target) return seq;
    }
    throw std::logic_error("no closing of the domino shuffle has the expected Abel shift");
}

}  // namespace dimercmg

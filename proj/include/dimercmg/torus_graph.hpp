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

#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimercmg/intlin.hpp"
#include "dimercmg/lattice_polygon.hpp"

namespace dimercmg {

enum class Color : std::uint8_t { Black, White };

/// Graph data as read from JSON, keyed by caller-chosen integer ids.
/// An edge joins black(0) to white(disp) in the universal cover.
struct RawGraph {
    struct Vertex {
        std::int64_t id;
        Color color;
    };
    struct Edge {
        std::int64_t id;
        std::int64_t black;
        std::int64_t white;
        LatticeVector disp;
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::map<std::int64_t, std::vector<std::int64_t>> rotations;  // counterclockwise edge ids
};

/// Edge weights on the white->black orientation; the reverse carries the reciprocal.
using EdgeWeights = std::map<std::int64_t, Rational>;

struct Face {
    std::vector<std::size_t> darts;  // counterclockwise, face on the left
};

struct ZigZagPath {
    std::vector<std::size_t> darts;
    LatticeVector homology_class;
    std::optional<std::size_t> edge_label;  // index into newton_polygon edges, once assigned
};

/// Validated bipartite graph on the torus, stored as a rotation system.
/// Vertices and edges are addressed by index; ids are kept for I/O.
///
/// Dart 2e runs black -> white along edge e with displacement +disp,
/// dart 2e+1 runs white -> black with -disp.
class TorusGraph {
public:
    const RawGraph& raw() const { return raw_; }
    std::size_t vertex_count() const { return raw_.vertices.size(); }
    std::size_t edge_count() const { return raw_.edges.size(); }
    std::size_t dart_count() const { return 2 * raw_.edges.size(); }

    Color color(std::size_t v) const { return raw_.vertices[v].color; }
    std::int64_t vertex_id(std::size_t v) const { return raw_.vertices[v].id; }
    std::int64_t edge_id(std::size_t e) const { return raw_.edges[e].id; }
    std::size_t vertex_index(std::int64_t id) const;  // throws InvalidGraph when absent
    std::size_t edge_index(std::int64_t id) const;
    std::optional<std::size_t> find_vertex(std::int64_t id) const;
    std::optional<std::size_t> find_edge(std::int64_t id) const;

    std::size_t black(std::size_t e) const { return black_[e]; }
    std::size_t white(std::size_t e) const { return white_[e]; }
    LatticeVector disp(std::size_t e) const { return raw_.edges[e].disp; }
    const std::vector<std::size_t>& rotation(std::size_t v) const { return rotation_[v]; }
    std::size_t degree(std::size_t v) const { return rotation_[v].size(); }

    static std::size_t edge_of(std::size_t d) { return d / 2; }
    static std::size_t reverse(std::size_t d) { return d ^ 1U; }
    std::size_t tail(std::size_t d) const { return d % 2 ? white_[d / 2] : black_[d / 2]; }
    std::size_t head(std::size_t d) const { return d % 2 ? black_[d / 2] : white_[d / 2]; }
    LatticeVector dart_disp(std::size_t d) const { return d % 2 ? -disp(d / 2) : disp(d / 2); }
    /// Dart leaving v along edge e.
    std::size_t dart_from(std::size_t v, std::size_t e) const { return black_[e] == v ? 2 * e : 2 * e + 1; }
    /// Position of the dart's edge in the rotation at its tail.
    std::size_t rotation_position(std::size_t d) const { return rot_pos_[d]; }

    /// Next dart along the face on the left of d.
    std::size_t face_next(std::size_t d) const;
    /// Next dart of the zig-zag path through d.
    std::size_t zigzag_next(std::size_t d) const;

    const std::vector<Face>& faces() const { return faces_; }
    std::size_t face_of_dart(std::size_t d) const { return face_of_dart_[d]; }
    const std::vector<ZigZagPath>& zigzags() const { return zigzags_; }
    std::size_t zigzag_of_dart(std::size_t d) const { return zigzag_of_dart_[d]; }

    std::size_t next_vertex_id() const;
    std::size_t next_edge_id() const;

private:
    friend TorusGraph validate_graph(RawGraph raw);
    RawGraph raw_;
    std::map<std::int64_t, std::size_t> vindex_, eindex_;
    std::vector<std::size_t> black_, white_, rot_pos_, face_of_dart_, zigzag_of_dart_;
    std::vector<std::vector<std::size_t>> rotation_;
    std::vector<Face> faces_;
    std::vector<ZigZagPath> zigzags_;
};

/// Checks bipartiteness, rotation consistency, connectivity, contractible faces and
/// V - E + F = 0. Throws NotBipartite, Disconnected, NonContractibleFace,
/// EulerMismatch, or InvalidGraph for malformed data.
TorusGraph validate_graph(RawGraph raw);

std::vector<ZigZagPath> zig_zag_paths(const TorusGraph& g);

/// Zig-zag classes sorted by angle and concatenated; lexicographically smallest vertex
/// at the origin. Throws TrivialZigZag.
ConvexIntegralPolygon newton_polygon(const TorusGraph& g);

/// Edge label of every zig-zag path: the index of the Newton polygon edge it runs along.
std::vector<std::size_t> zigzag_edge_labels(const TorusGraph& g, const ConvexIntegralPolygon& newton);

struct MinimalityReport {
    bool minimal = true;
    std::string certificate;  // empty when minimal
};

MinimalityReport check_minimality(const TorusGraph& g);

struct Seed {
    /// Rows and columns indexed by face.
    IntMatrix epsilon;
    /// Boundary cycle of each face as signed edge list: +e for white->black, -(e+1) otherwise.
    std::vector<std::vector<std::int64_t>> face_cycles;
};

Seed seed_of(const TorusGraph& g);

/// Weight of a dart: W(e) for white->black, 1/W(e) otherwise.
Rational dart_weight(const TorusGraph& g, const EdgeWeights& w, std::size_t d);
Rational product_along(const TorusGraph& g, const EdgeWeights& w, const std::vector<std::size_t>& darts);

struct FaceVariables {
    std::vector<Rational> faces;
    Rational monodromy_x;  // along a fixed graph cycle of class (1,0)
    Rational monodromy_y;  // along a fixed graph cycle of class (0,1)
};

/// Throws InvalidInput for missing or zero weights.
FaceVariables face_variables(const TorusGraph& g, const EdgeWeights& w);

/// Closed walks of class (1,0) and (0,1), chosen deterministically from a BFS tree.
std::array<std::vector<std::size_t>, 2> homology_basis_cycles(const TorusGraph& g);

/// Monodromy around each zig-zag path (alternating product of weights along it).
std::vector<Rational> zigzag_monodromies(const TorusGraph& g, const EdgeWeights& w);

EdgeWeights unit_weights(const TorusGraph& g);

struct CatalogEntry {
    std::string name;
    TorusGraph graph;
    ConvexIntegralPolygon expected_newton;
    std::int64_t genus = 0;
};

/// square_lattice, square_lattice_<k>, honeycomb, honeycomb_<k>. Throws UnknownCatalogEntry.
CatalogEntry catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace dimercmg

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

#include "dimercmg/abel_spectral.hpp"
#include "dimercmg/intlin.hpp"
#include "dimercmg/torus_graph.hpp"

namespace dimercmg {

struct Move {
    enum class Kind { Spider, Contract, Expand };
    Kind kind = Kind::Spider;
    std::int64_t face = 0;    // Spider: face index of the current graph
    std::int64_t vertex = 0;  // Contract / Expand: vertex id
    std::int64_t edge = 0;    // Expand: first edge id of the block moved to the new vertex
    std::size_t count = 0;    // Expand: number of consecutive edges (ccw) in the block

    static Move spider(std::int64_t face) { return {Kind::Spider, face, 0, 0, 0}; }
    static Move contract(std::int64_t vertex) { return {Kind::Contract, 0, vertex, 0, 0}; }
    static Move expand(std::int64_t vertex, std::int64_t edge, std::size_t count) {
        return {Kind::Expand, 0, vertex, edge, count};
    }
};

std::string describe(const Move& m);

struct MoveResult {
    TorusGraph graph;
    EdgeWeights weights;
    /// Old face index -> new face index, for faces that persist.
    std::map<std::size_t, std::size_t> face_map;
};

/// Urban renewal at a quadrilateral face. With boundary weights a_0..a_3
/// (a_i on the i-th boundary edge, counterclockwise) and D = a_0 a_2 + a_1 a_3,
/// the new edge parallel to a_i carries a_{i+2}/D and the four pendant edges 1.
/// Throws NotQuadFace, WrongColorPattern, MoveNotApplicable.
MoveResult spider_move(const TorusGraph& g, const EdgeWeights& w, std::size_t face);

/// Removes a 2-valent vertex, merging its two neighbours (either color).
/// Throws NotTwoValent, MoveNotApplicable.
MoveResult contract_vertex(const TorusGraph& g, const EdgeWeights& w, std::int64_t vertex);

/// Moves `count` consecutive edges of `vertex` (ccw from `edge`) to a new vertex
/// of the same color, joined to the old one through a new 2-valent vertex.
/// Throws MoveNotApplicable.
MoveResult expand_vertex(const TorusGraph& g, const EdgeWeights& w, std::int64_t vertex, std::int64_t edge,
                         std::size_t count);

MoveResult apply_move(const TorusGraph& g, const EdgeWeights& w, const Move& m);

/// Face-level mutation X_i -> X_i (1 + X_k^{sgn e_ik})^{e_ik}, X_k -> 1/X_k,
/// with e the seed's exchange matrix. Involutive.
std::vector<Rational> mutate_x(const IntMatrix& epsilon, const std::vector<Rational>& x, std::size_t k);

/// The one-line form X_i -> X_i (1 + X_k)^{-(e_i, e_k)} with (e_i, e_k) = -epsilon_ik.
/// It computes the variables of the basis e_i + [(e_i,e_k)]_+ e_k, so it agrees with
/// mutate_x after multiplying by X_k'^{[(e_i,e_k)]_+}.
std::vector<Rational> mutate_x_one_line(const IntMatrix& epsilon, const std::vector<Rational>& x, std::size_t k);

/// Exchange matrix mutation at k.
IntMatrix mutate_epsilon(const IntMatrix& epsilon, std::size_t k);

/// Identification of a final graph with the base graph. Maps are keyed by ids.
/// A vertex v' of the final graph, at its representative, corresponds to the
/// base vertex vertex_map[v'] translated by translation + s(v'), where the
/// per-vertex offsets s are fixed by the displacements with s = 0 at the
/// smallest final vertex id.
struct ClosingIsomorphism {
    std::map<std::int64_t, std::int64_t> vertex_map;
    std::map<std::int64_t, std::int64_t> edge_map;
    LatticeVector translation;
};

/// Checks the closing against both graphs and returns the offsets t(v') = translation + s(v')
/// keyed by final vertex id. Throws ClosingIsomorphismInvalid.
std::map<std::int64_t, LatticeVector> verify_closing(const TorusGraph& final_graph, const TorusGraph& base,
                                                     const ClosingIsomorphism& c);

/// All color- and rotation-preserving isomorphisms from `from` onto `to` that are
/// compatible with displacements, each with translation 0. Brute force.
std::vector<ClosingIsomorphism> find_isomorphisms(const TorusGraph& from, const TorusGraph& to);

struct Segment {
    std::vector<Move> moves;
    ClosingIsomorphism closing;
};

/// A seed cluster transformation, possibly a composite of several closed segments.
struct MoveSequence {
    TorusGraph base;
    std::vector<Segment> segments;
};

struct TranslationProfile {
    /// Per zig-zag path of the base graph: strips moved along the inward normal.
    std::vector<std::int64_t> per_strand;
    /// Family sums g(E_rho), indexed by the edges of the base Newton polygon.
    IntVector per_edge;
    /// Canonical representative of g modulo j H_1.
    IntVector reduced;
};

struct SequenceReport {
    EdgeWeights final_weights;  // keyed by base edge ids
    TranslationProfile profile;
    Divisor abel_shift;         // d(w_0) - d_t(w_0), one entry per base zig-zag
    std::size_t base_white = 0; // w_0 as a vertex index of the base graph
    std::vector<std::int64_t> strand_permutation;  // base zig-zag -> base zig-zag it lands on
};

/// Pushes weights through every move, tracks strands and the Abel map, applies the
/// closings. Per-move callbacks receive (before, after, move) for cross-checks.
/// Throws MoveNotApplicable, ClosingIsomorphismInvalid, StrandMatchAmbiguous.
SequenceReport run_sequence(const MoveSequence& seq, const EdgeWeights& w);

/// psi_N: the reduced translation profile.
IntVector psi(const MoveSequence& seq);

/// g >= 1: psi vanishes. g = 0: every g(E_rho) divisible by |E_rho|.
bool is_trivial(const MoveSequence& seq);
bool is_trivial(const TranslationProfile& profile, const ConvexIntegralPolygon& newton);

/// Concatenation of the segments of a and b (same base graph).
MoveSequence concatenate(const MoveSequence& a, const MoveSequence& b);

/// A sequence with no moves closed by the pure translation m.
MoveSequence translation_sequence(const TorusGraph& base, LatticeVector m);

/// Spider at two opposite faces of the square lattice, then contraction of the four
/// old vertices, closed so that the Abel shift is beta - alpha.
MoveSequence square_lattice_domino_shuffle();

}  // namespace dimercmg

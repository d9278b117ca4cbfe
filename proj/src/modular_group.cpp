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

#include "dimercmg/modular_group.hpp"

#include "dimercmg/error.hpp"

namespace dimercmg {

std::string_view case_name(GroupCase c) {
    return c == GroupCase::InteriorPoint ? "interior_point" : "no_interior_point";
}

EmbeddingJ build_j(const ConvexIntegralPolygon& p) {
    IntMatrix B(p.size(), 2);
    for (std::size_t r = 0; r < p.size(); ++r) {
        const auto e = p.edge_vector(r);
        B(r, 0) = static_cast<long>(pairing(e, {1, 0}));
        B(r, 1) = static_cast<long>(pairing(e, {0, 1}));
    }
    return {p, std::move(B)};
}

FgAbelianGroup ambient_quotient(const ConvexIntegralPolygon& p) { return cokernel(build_j(p).B); }

IntMatrix sum_zero_coordinates(const IntMatrix& f) {
    const std::size_t n = f.rows();
    if (n == 0) return IntMatrix(0, f.cols());
    IntMatrix c(n - 1, f.cols());
    for (std::size_t k = 0; k < f.cols(); ++k) {
        Int prefix = 0;
        for (std::size_t r = 0; r < n; ++r) {
            prefix += f(r, k);
            if (r + 1 < n) c(r, k) = prefix;
        }
        if (prefix != 0) throw Error(ErrorCode::InvalidInput, "vector does not lie in the sum-zero sublattice");
    }
    return c;
}

ClusterModularGroupResult cluster_modular_group(const ConvexIntegralPolygon& p) {
    ClusterModularGroupResult out;
    out.genus = interior_lattice_points(p).count;
    if (out.genus >= 1) {
        out.case_tag = GroupCase::InteriorPoint;
        out.group = cokernel(sum_zero_coordinates(build_j(p).B));
        return out;
    }
    // Sum-zero f with |E_rho| | f(E_rho): f = diag(m) k where sum m_rho k_rho = 0.
    out.case_tag = GroupCase::NoInteriorPoint;
    const auto edges = edge_data(p);
    IntMatrix weights(1, edges.size());
    for (std::size_t r = 0; r < edges.size(); ++r) weights(0, r) = static_cast<long>(edges[r].multiplicity);
    IntMatrix S = kernel_basis(weights);
    for (std::size_t r = 0; r < S.rows(); ++r)
        for (std::size_t c = 0; c < S.cols(); ++c) S(r, c) *= static_cast<long>(edges[r].multiplicity);
    out.group = cokernel(sum_zero_coordinates(S));
    return out;
}

namespace {

void require_interior(const ConvexIntegralPolygon& p) {
    if (interior_lattice_points(p).count == 0)
        throw Error(ErrorCode::NoInteriorPoint, "the torsion analysis needs an interior lattice point");
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Column-style Hermite form of the lattice spanned by two rational vectors.
std::array<RationalVector, 2> hermite_basis(const std::array<RationalVector, 2>& v) {
    Int den = 1;
    for (const auto& u : v) den = lcm(lcm(den, u.x.get_den()), u.y.get_den());
    IntMatrix M(2, 2);
    for (std::size_t k = 0; k < 2; ++k) {
        M(0, k) = Int(v[k].x * den);
        M(1, k) = Int(v[k].y * den);
    }
    while (M(1, 0) != 0) {
        if (M(1, 1) == 0 || abs(M(1, 0)) < abs(M(1, 1))) M.swap_cols(0, 1);
        Int q = M(1, 0) / M(1, 1);
        M.add_col_multiple(0, 1, -q);
    }
    if (M(1, 1) < 0) M.negate_col(1);
    if (M(0, 0) < 0) M.negate_col(0);
    if (M(0, 0) == 0 || M(1, 1) == 0) throw std::logic_error("lattice basis is degenerate");
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), M(0, 1).get_mpz_t(), M(0, 0).get_mpz_t());
    M.add_col_multiple(1, 0, -q);
    std::array<RationalVector, 2> out;
    for (std::size_t k = 0; k < 2; ++k) {
        out[k].x = Rational(M(0, k), den);
        out[k].y = Rational(M(1, k), den);
        out[k].x.canonicalize();
        out[k].y.canonicalize();
    }
    return out;
}

Rational det2(const std::array<RationalVector, 2>& b) { return b[0].x * b[1].y - b[0].y * b[1].x; }

}  // namespace

TorsionLattice torsion_lattice(const ConvexIntegralPolygon& p) {
    require_interior(p);
    // U B V = D: B m is integral iff (V^{-1} m)_i lies in (1/d_i) Z.
    const auto snf = smith_normal_form(build_j(p).B);
    std::array<RationalVector, 2> raw;
    for (std::size_t k = 0; k < 2; ++k) {
        raw[k].x = Rational(snf.V(0, k), snf.D(k, k));
        raw[k].y = Rational(snf.V(1, k), snf.D(k, k));
        raw[k].x.canonicalize();
        raw[k].y.canonicalize();
    }
    TorsionLattice L;
    L.basis = hermite_basis(raw);
    for (std::size_t k = 0; k < 2; ++k) L.denominators[k] = lcm(L.basis[k].x.get_den(), L.basis[k].y.get_den());
    const Rational inv = 1 / abs(det2(L.basis));
    if (inv.get_den() != 1) throw std::logic_error("L does not contain H_1(T,Z)");
    L.index = inv.get_num();
    return L;
}

MaxTranslationPolygon max_translation_polygon(const ConvexIntegralPolygon& p,
                                              std::optional<std::array<RationalVector, 2>> basis) {
    const auto L = torsion_lattice(p);
    MaxTranslationPolygon out;
    out.basis = basis.value_or(L.basis);
    if (basis) {
        // Same lattice iff the Hermite forms agree.
        if (det2(*basis) == 0 || hermite_basis(*basis) != L.basis)
            throw Error(ErrorCode::InvalidInput, "basis does not generate the torsion lattice");
    }
    const auto B = build_j(p).B;
    std::array<std::vector<Rational>, 2> jg;
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t r = 0; r < B.rows(); ++r)
            jg[k].push_back(Rational(B(r, 0)) * out.basis[k].x + Rational(B(r, 1)) * out.basis[k].y);

    std::vector<LatticeVector> edges;
    std::array<Int, 2> sum{0, 0};
    for (std::size_t r = 0; r < B.rows(); ++r) {
        const Rational a = jg[1][r], b = -jg[0][r];
        if (a.get_den() != 1 || b.get_den() != 1) throw std::logic_error("j(L) is not integral");
        out.w_coefficients.push_back({a.get_num(), b.get_num()});
        sum[0] += a.get_num();
        sum[1] += b.get_num();
        edges.push_back({a.get_num().get_si(), b.get_num().get_si()});
    }
    if (sum[0] != 0 || sum[1] != 0) throw std::logic_error("translation vectors do not close up");
    out.polygon = polygon_from_edges(edges, {0, 0}, StartPolicy::AsGiven);
    return out;
}

Pic0Presentation pic0_stack_presentation(const ConvexIntegralPolygon& p) {
    require_interior(p);
    const auto edges = edge_data(p);
    const std::size_t n = edges.size();
    Pic0Presentation out;
    // Principal divisors: m -> sum_rho <beta(e_rho), m> L_rho with beta(e_rho) = |E_rho| u_rho.
    out.relations = IntMatrix(n, 2);
    for (std::size_t r = 0; r < n; ++r) {
        out.generators.push_back("L_" + std::to_string(r));
        const auto u = edges[r].inward_normal;
        out.relations(r, 0) = static_cast<long>(edges[r].multiplicity * dot(u, {1, 0}));
        out.relations(r, 1) = static_cast<long>(edges[r].multiplicity * dot(u, {0, 1}));
    }
    // Degree of sum b_rho D_rho with b_rho = f_rho / |E_rho| is sum f_rho.
    IntMatrix degree(1, n);
    for (std::size_t r = 0; r < n; ++r) degree(0, r) = 1;
    const IntMatrix K = kernel_basis(degree);
    IntMatrix coords(K.cols(), 2);
    for (std::size_t k = 0; k < 2; ++k) {
        auto c = solve_integer(K, out.relations.column(k));
        if (!c) throw std::logic_error("principal divisor has nonzero degree");
        for (std::size_t i = 0; i < c->size(); ++i) coords(i, k) = (*c)[i];
    }
    out.group = cokernel(coords);
    return out;
}

}  // namespace dimercmg

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

#include "dimercmg/abel_spectral.hpp"

#include <deque>
#include <numeric>

#include "dimercmg/error.hpp"

namespace dimercmg {

std::int64_t degree(const Divisor& d) { return std::accumulate(d.begin(), d.end(), std::int64_t{0}); }

Divisor operator+(Divisor a, const Divisor& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Divisor operator-(Divisor a, const Divisor& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

Divisor div_character(const std::vector<LatticeVector>& classes, LatticeVector m) {
    Divisor d;
    for (auto c : classes) d.push_back(pairing(c, m));
    return d;
}

std::vector<Divisor> propagate_abel(const TorusGraph& g, const std::vector<std::size_t>& label_of_zigzag,
                                    const std::vector<LatticeVector>& label_classes,
                                    const std::map<std::size_t, Divisor>& seeds) {
    const std::size_t L = label_classes.size();
    // Value at the white representative implied by the black representative along e.
    auto white_from_black = [&](std::size_t e, Divisor d) {
        d[label_of_zigzag[g.zigzag_of_dart(2 * e)]] -= 1;
        d[label_of_zigzag[g.zigzag_of_dart(2 * e + 1)]] -= 1;
        return d - div_character(label_classes, g.disp(e));
    };
    std::vector<std::optional<Divisor>> val(g.vertex_count());
    std::deque<std::size_t> queue;
    for (const auto& [v, d] : seeds) {
        if (d.size() != L) throw Error(ErrorCode::DimensionMismatch, "divisor length differs from label count");
        val[v] = d;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto e : g.rotation(v)) {
            if (g.color(v) == Color::Black) {
                const auto u = g.white(e);
                if (!val[u]) val[u] = white_from_black(e, *val[v]), queue.push_back(u);
            } else {
                const auto u = g.black(e);
                if (val[u]) continue;
                // Invert the rule: d(b) = d(w) + labels + div chi^disp.
                Divisor d = *val[v] + div_character(label_classes, g.disp(e));
                d[label_of_zigzag[g.zigzag_of_dart(2 * e)]] += 1;
                d[label_of_zigzag[g.zigzag_of_dart(2 * e + 1)]] += 1;
                val[u] = d;
                queue.push_back(u);
            }
        }
    }
    std::vector<Divisor> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (!val[v]) throw Error(ErrorCode::InconsistentAbelMap, "vertex not reached from the seeds");
        out.push_back(*val[v]);
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (white_from_black(e, out[g.black(e)]) != out[g.white(e)])
            throw Error(ErrorCode::InconsistentAbelMap, "local rule fails on edge " + std::to_string(g.edge_id(e)));
    return out;
}

AbelMap discrete_abel_map(const TorusGraph& g, std::optional<std::size_t> base_white) {
    AbelMap a;
    if (base_white) {
        if (*base_white >= g.vertex_count() || g.color(*base_white) != Color::White)
            throw Error(ErrorCode::InvalidInput, "base vertex must be white");
        a.base_white = *base_white;
    } else {
        while (g.color(a.base_white) != Color::White) ++a.base_white;
    }
    for (const auto& z : g.zigzags()) a.classes.push_back(z.homology_class);
    std::vector<std::size_t> labels(g.zigzags().size());
    std::iota(labels.begin(), labels.end(), 0);
    a.values = propagate_abel(g, labels, a.classes, {{a.base_white, Divisor(labels.size(), 0)}});
    return a;
}

std::vector<int> kasteleyn_signs(const TorusGraph& g) {
    // GF(2) system: one row per face, unknown bit per edge (bit set = sign -1).
    const std::size_t E = g.edge_count();
    std::vector<std::vector<std::uint8_t>> rows;
    for (const auto& f : g.faces()) {
        std::vector<std::uint8_t> row(E + 1, 0);
        for (auto d : f.darts) row[TorusGraph::edge_of(d)] ^= 1;
        const std::size_t k = f.darts.size() / 2;
        row[E] = static_cast<std::uint8_t>((k + 1) % 2);
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < E && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][c])
                for (std::size_t j = c; j <= E; ++j) rows[i][j] ^= rows[r][j];
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][E]) throw Error(ErrorCode::NoValidSignAssignment, "face sign conditions are inconsistent");
    // Free edges get +1; pivots read off the reduced rows.
    std::vector<int> signs(E, 1);
    for (std::size_t i = 0; i < r; ++i) signs[pivot_col[i]] = rows[i][E] ? -1 : 1;
    return signs;
}

namespace {

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> color_classes(const TorusGraph& g) {
    std::vector<std::size_t> blacks, whites;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) (g.color(v) == Color::Black ? blacks : whites).push_back(v);
    if (blacks.size() != whites.size())
        throw Error(ErrorCode::UnbalancedColors, "black and white vertex counts differ");
    return {blacks, whites};
}

LaurentPoly2 edge_entry(const TorusGraph& g, const EdgeWeights& w, const std::vector<int>& signs, std::size_t e) {
    const auto d = g.disp(e);
    return LaurentPoly2::monomial({d.x, d.y}, dart_weight(g, w, 2 * e + 1) * signs[e]);
}

}  // namespace

LaurentPoly2 determinant(std::vector<std::vector<LaurentPoly2>> m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly2(1);
    LaurentPoly2 prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t s = k + 1;
            while (s < n && m[s][k].is_zero()) ++s;
            if (s == n) return {};
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return m[n - 1][n - 1].scaled(sign);
}

LaurentPoly2 kasteleyn_polynomial(const TorusGraph& g, const EdgeWeights& w) {
    const auto [blacks, whites] = color_classes(g);
    const auto signs = kasteleyn_signs(g);
    std::vector<std::size_t> row(g.vertex_count()), col(g.vertex_count());
    for (std::size_t i = 0; i < blacks.size(); ++i) row[blacks[i]] = i, col[whites[i]] = i;
    std::vector<std::vector<LaurentPoly2>> K(blacks.size(), std::vector<LaurentPoly2>(whites.size()));
    for (std::size_t e = 0; e < g.edge_count(); ++e) K[row[g.black(e)]][col[g.white(e)]] += edge_entry(g, w, signs, e);
    return determinant(std::move(K));
}

LaurentPoly2 dimer_cover_expansion(const TorusGraph& g, const EdgeWeights& w) {
    const auto [blacks, whites] = color_classes(g);
    const auto signs = kasteleyn_signs(g);
    std::vector<std::size_t> col(g.vertex_count());
    for (std::size_t i = 0; i < whites.size(); ++i) col[whites[i]] = i;
    const std::size_t n = blacks.size();
    std::vector<std::size_t> match(n);  // column matched to each black row
    std::vector<bool> used(n, false);
    LaurentPoly2 total;
    // Depth-first over black vertices, one edge per black.
    auto recurse = [&](auto&& self, std::size_t i, const LaurentPoly2& acc) -> void {
        if (i == n) {
            // Permutation sign by counting inversions.
            std::size_t inv = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b) inv += match[a] > match[b];
            total += inv % 2 ? -acc : acc;
            return;
        }
        for (auto e : g.rotation(blacks[i])) {
            const auto c = col[g.white(e)];
            if (used[c]) continue;
            used[c] = true;
            match[i] = c;
            self(self, i + 1, acc * edge_entry(g, w, signs, e));
            used[c] = false;
        }
    };
    recurse(recurse, 0, LaurentPoly2(1));
    return total;
}

}  // namespace dimercmg

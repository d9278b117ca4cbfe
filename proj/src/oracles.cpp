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

#include "dimercmg/oracles.hpp"

namespace dimercmg {

// Torsion of A from determinantal divisors: d1 = gcd of entries, d1 d2 = gcd of 2x2 minors.
std::vector<Int> torsion_by_minors(const IntMatrix& B) {
    Int g1 = 0, g2 = 0;
    for (std::size_t i = 0; i < B.rows(); ++i) {
        g1 = gcd(g1, gcd(B(i, 0), B(i, 1)));
        for (std::size_t j = i + 1; j < B.rows(); ++j) g2 = gcd(g2, B(i, 0) * B(j, 1) - B(i, 1) * B(j, 0));
    }
    std::vector<Int> t;
    if (g1 > 1) t.push_back(g1);
    if (g2 / g1 > 1) t.push_back(g2 / g1);
    return t;
}

// Invariant factors of a finite abelian group given by an explicit element list,
// from counts of elements killed by prime powers.
std::vector<Int> invariant_factors_by_counting(const std::set<std::vector<long>>& elems, const std::vector<long>& mods) {
    auto times = [&](const std::vector<long>& x, long k) {
        std::vector<long> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] * k) % mods[i];
        return y;
    };
    const std::vector<long> zero(mods.size(), 0);
    long order = static_cast<long>(elems.size());
    std::vector<Int> prime_powers;
    for (long p = 2; p <= order; ++p) {
        bool prime = true;
        for (long d = 2; d * d <= p; ++d) prime &= p % d != 0;
        if (!prime || order % p != 0) continue;
        // killed[j] = #{x : p^j x = 0}.
        std::vector<long> killed{1};
        for (long pj = p;; pj *= p) {
            long c = 0;
            for (const auto& x : elems) c += times(x, pj) == zero;
            // Stops once the p-primary part is exhausted.
            if (c == killed.back()) break;
            killed.push_back(c);
        }
        // Number of cyclic p-factors of exponent >= j is log_p(killed[j]/killed[j-1]).
        std::vector<long> at_least;
        for (std::size_t j = 1; j < killed.size(); ++j) {
            long ratio = killed[j] / killed[j - 1], k = 0;
            while (ratio > 1) ratio /= p, ++k;
            at_least.push_back(k);
        }
        for (std::size_t j = 0; j < at_least.size(); ++j) {
            long exact = at_least[j] - (j + 1 < at_least.size() ? at_least[j + 1] : 0);
            Int pe = 1;
            for (std::size_t e = 0; e <= j; ++e) pe *= static_cast<unsigned long>(p);
            for (long k = 0; k < exact; ++k) prime_powers.push_back(pe);
        }
    }
    return group_from_cyclic_orders(prime_powers).torsion;
}

// Genus-zero group as the subgroup of prod Z/|E_rho| generated by e_rho - e_{rho+1}.
FgAbelianGroup genus_zero_by_enumeration(const ConvexIntegralPolygon& p) {
    std::vector<long> mods;
    for (const auto& e : edge_data(p)) mods.push_back(e.multiplicity);
    const std::size_t n = mods.size();
    std::vector<std::vector<long>> gens;
    for (std::size_t r = 0; r + 1 < n; ++r) {
        std::vector<long> g(n, 0);
        g[r] = 1 % mods[r];
        g[r + 1] = (mods[r + 1] - 1) % mods[r + 1];
        gens.push_back(g);
    }
    std::set<std::vector<long>> seen{std::vector<long>(n, 0)};
    std::vector<std::vector<long>> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        auto x = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            auto y = x;
            for (std::size_t i = 0; i < n; ++i) y[i] = (y[i] + g[i]) % mods[i];
            if (seen.insert(y).second) frontier.push_back(y);
        }
    }
    return FgAbelianGroup{0, invariant_factors_by_counting(seen, mods)};
}

}  // namespace dimercmg

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

#include "dimercmg/laurent.hpp"

#include <array>
#include <climits>
#include <sstream>
#include <vector>

#include "dimercmg/error.hpp"

namespace dimercmg {

LaurentPoly2 LaurentPoly2::monomial(Exponent e, const Rational& c) {
    LaurentPoly2 p;
    p.add_term(e, c);
    return p;
}

Rational LaurentPoly2::coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly2::add_term(Exponent e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) p.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return p;
}

LaurentPoly2 operator-(const LaurentPoly2& a) { return a.scaled(-1); }

LaurentPoly2 LaurentPoly2::shifted(Exponent s) const {
    LaurentPoly2 p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(Exponent{e.first + s.first, e.second + s.second}, c);
    return p;
}

LaurentPoly2 LaurentPoly2::scaled(const Rational& k) const {
    LaurentPoly2 p;
    if (k == 0) return p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, c * k);
    return p;
}

LaurentPoly2 LaurentPoly2::twisted(int sz, int sw) const {
    LaurentPoly2 p;
    for (const auto& [e, c] : terms_) {
        const bool flip = (sz < 0 && e.first % 2 != 0) != (sw < 0 && e.second % 2 != 0);
        p.terms_.emplace(e, flip ? Rational(-c) : c);
    }
    return p;
}

std::string LaurentPoly2::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        os << (first ? "" : " + ") << '(' << c.get_str() << ')';
        if (e.first) os << "*z^" << e.first;
        if (e.second) os << "*w^" << e.second;
        first = false;
    }
    return os.str();
}

LaurentPoly2 exact_divide(const LaurentPoly2& a, const LaurentPoly2& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    LaurentPoly2 q, r = a;
    if (a.is_zero()) return q;
    const auto [lead_b, lead_c] = *b.terms().rbegin();
    // Exponents of an exact quotient lie in the box difference of the supports,
    // and the leading exponent of the remainder strictly decreases.
    auto box = [](const LaurentPoly2& p) {
        std::array<std::int64_t, 4> b{INT64_MAX, INT64_MIN, INT64_MAX, INT64_MIN};
        for (const auto& [e, c] : p.terms()) {
            b[0] = std::min(b[0], e.first), b[1] = std::max(b[1], e.first);
            b[2] = std::min(b[2], e.second), b[3] = std::max(b[3], e.second);
        }
        return b;
    };
    const auto ba = box(a), bb = box(b);
    while (!r.is_zero()) {
        const auto [lead_r, rc] = *r.terms().rbegin();
        const LaurentPoly2::Exponent t{lead_r.first - lead_b.first, lead_r.second - lead_b.second};
        if (t.first < ba[0] - bb[0] || t.first > ba[1] - bb[1] || t.second < ba[2] - bb[2] || t.second > ba[3] - bb[3])
            throw Error(ErrorCode::InvalidInput, "polynomial division is not exact");
        const auto term = LaurentPoly2::monomial(t, rc / lead_c);
        q += term;
        r -= term * b;
    }
    return q;
}

std::optional<ConvexIntegralPolygon> newton_polygon_of(const LaurentPoly2& p) {
    std::vector<LatticeVector> pts;
    for (const auto& [e, c] : p.terms()) pts.push_back({e.first, e.second});
    return convex_hull(pts);
}

LaurentPoly2 normalized_poly(const LaurentPoly2& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot normalize the zero polynomial");
    const auto [low, c] = *p.terms().begin();
    return p.shifted({-low.first, -low.second}).scaled(Rational(1) / c);
}

LaurentPoly2 sign_class_canonical(const LaurentPoly2& p) {
    auto best = normalized_poly(p);
    for (auto [sz, sw] : {std::pair{1, -1}, std::pair{-1, 1}, std::pair{-1, -1}}) {
        auto cand = normalized_poly(p.twisted(sz, sw));
        if (cand < best) best = std::move(cand);
    }
    return best;
}

}  // namespace dimercmg

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
#include <string>
#include <utility>

#include "dimercmg/intlin.hpp"
#include "dimercmg/lattice_polygon.hpp"

namespace dimercmg {

/// Sparse Laurent polynomial in z, w with exact rational coefficients.
/// Zero coefficients are never stored.
class LaurentPoly2 {
public:
    using Exponent = std::pair<std::int64_t, std::int64_t>;

    LaurentPoly2() = default;
    explicit LaurentPoly2(const Rational& c) { add_term({0, 0}, c); }
    static LaurentPoly2 monomial(Exponent e, const Rational& c = 1);

    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(Exponent e) const;
    void add_term(Exponent e, const Rational& c);

    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
    friend LaurentPoly2 operator-(const LaurentPoly2& a);
    friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;
    /// Lexicographic comparison of the term lists; a total order used for canonical choices.
    friend bool operator<(const LaurentPoly2& a, const LaurentPoly2& b) { return a.terms_ < b.terms_; }

    /// Multiplies by z^e.first w^e.second.
    LaurentPoly2 shifted(Exponent e) const;
    LaurentPoly2 scaled(const Rational& c) const;
    /// P(sz * z, sw * w) for signs sz, sw in {+1, -1}.
    LaurentPoly2 twisted(int sz, int sw) const;

    std::string to_string() const;

private:
    std::map<Exponent, Rational> terms_;
};

/// Exact quotient a / b. Throws InvalidInput when b does not divide a.
LaurentPoly2 exact_divide(const LaurentPoly2& a, const LaurentPoly2& b);

/// Convex hull of the support; nullopt when the support is not two-dimensional.
std::optional<ConvexIntegralPolygon> newton_polygon_of(const LaurentPoly2& p);

/// Lexicographically smallest exponent moved to the origin with coefficient 1.
/// Throws ZeroPolynomial.
LaurentPoly2 normalized_poly(const LaurentPoly2& p);

/// Smallest normalized form among P(+-z, +-w): removes the choice of spin
/// structure carried by the Kasteleyn signs.
LaurentPoly2 sign_class_canonical(const LaurentPoly2& p);

}  // namespace dimercmg

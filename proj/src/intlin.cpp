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

#include "dimercmg/intlin.hpp"

#include <sstream>
#include <stdexcept>

#include "dimercmg/error.hpp"

namespace dimercmg {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rows[r][c]);
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntVector IntMatrix::operator*(const IntVector& x) const {
    if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
    IntVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
    return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product size mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

std::string FgAbelianGroup::to_string() const {
    std::string s;
    if (rank == 1) s = "Z";
    else if (rank > 1) s = "Z^" + std::to_string(rank);
    for (const auto& d : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + d.get_str();
    return s.empty() ? "0" : s;
}

SmithDecomposition smith_normal_form(const IntMatrix& B) {
    const std::size_t m = B.rows(), n = B.cols();
    IntMatrix D = B, U = IntMatrix::identity(m), V = IntMatrix::identity(n);

    auto row_add = [&](std::size_t dst, std::size_t src, const Int& k) {
        D.add_row_multiple(dst, src, k);
        U.add_row_multiple(dst, src, k);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Int& k) {
        D.add_col_multiple(dst, src, k);
        V.add_col_multiple(dst, src, k);
    };
    auto row_swap = [&](std::size_t a, std::size_t b) { D.swap_rows(a, b); U.swap_rows(a, b); };
    auto col_swap = [&](std::size_t a, std::size_t b) { D.swap_cols(a, b); V.swap_cols(a, b); };

    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (D(i, j) != 0 && (pi == m || abs(D(i, j)) < abs(D(pi, pj)))) pi = i, pj = j;
        if (pi == m) break;
        row_swap(t, pi);
        col_swap(t, pj);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                Int q = D(i, t) / D(t, t);  // truncating division
                row_add(i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                Int q = D(t, j) / D(t, t);
                col_add(j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) {
                // A remainder is smaller than the pivot; promote it.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (D(i, t) != 0 && abs(D(i, t)) < abs(D(bi, bj))) bi = i, bj = t;
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(t, j) != 0 && abs(D(t, j)) < abs(D(bi, bj))) bi = t, bj = j;
                row_swap(t, bi);
                col_swap(t, bj);
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) { bad = i; break; }
            if (bad == m) break;
            row_add(t, bad, 1);
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
    return {std::move(U), std::move(D), std::move(V), t};
}

FgAbelianGroup cokernel(const IntMatrix& B) {
    const auto snf = smith_normal_form(B);
    FgAbelianGroup g;
    g.rank = B.rows() - snf.rank;
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (snf.D(i, i) > 1) g.torsion.push_back(snf.D(i, i));
    return g;
}

FgAbelianGroup group_from_cyclic_orders(const std::vector<Int>& orders) {
    IntMatrix d(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) d(i, i) = orders[i];
    return cokernel(d);
}

IntMatrix kernel_basis(const IntMatrix& B) {
    const auto snf = smith_normal_form(B);
    const std::size_t n = B.cols();
    IntMatrix K(n, n - snf.rank);
    for (std::size_t j = snf.rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) K(i, j - snf.rank) = snf.V(i, j);
    return K;
}

namespace {

// Row echelon basis of the row span of A; pivots positive, strictly increasing columns.
std::vector<std::pair<std::size_t, IntVector>> echelon_rows(IntMatrix A) {
    std::vector<std::pair<std::size_t, IntVector>> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        while (true) {
            std::size_t best = A.rows();
            for (std::size_t i = r; i < A.rows(); ++i)
                if (A(i, c) != 0 && (best == A.rows() || abs(A(i, c)) < abs(A(best, c)))) best = i;
            if (best == A.rows()) break;
            A.swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < A.rows(); ++i) {
                if (A(i, c) == 0) continue;
                Int q = A(i, c) / A(r, c);
                A.add_row_multiple(i, r, -q);
                if (A(i, c) != 0) done = false;
            }
            if (done) {
                if (A(r, c) < 0) A.negate_row(r);
                out.emplace_back(c, A.row(r));
                ++r;
                break;
            }
        }
    }
    return out;
}

}  // namespace

IntVector reduce_mod_image(const IntVector& x, const IntMatrix& B) {
    if (x.size() != B.rows()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from matrix rows");
    IntVector y = x;
    for (const auto& [p, h] : echelon_rows(B.transpose())) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), y[p].get_mpz_t(), h[p].get_mpz_t());
        if (q == 0) continue;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] -= q * h[i];
    }
    return y;
}

std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b) {
    if (b.size() != A.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
    const auto snf = smith_normal_form(A);
    const IntVector c = snf.U * b;
    IntVector y(A.cols());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < snf.rank) {
            if (c[i] % snf.D(i, i) != 0) return std::nullopt;
            y[i] = c[i] / snf.D(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.V * y;
}

Int determinant(const IntMatrix& A) {
    if (A.rows() != A.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    IntMatrix M = A;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && M(s, k) == 0) ++s;
            if (s == n) return 0;
            M.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j));
                mpz_divexact(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

}  // namespace dimercmg

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
#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dimercmg {

using Int = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols = 0);
    static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector column(std::size_t c) const;
    IntVector row(std::size_t r) const;
    IntMatrix transpose() const;
    IntVector operator*(const IntVector& x) const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    // Elementary operations, used by the reductions below.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);  // row dst += k*row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// U * B * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    std::size_t rank = 0;
};

/// Z^rank plus torsion, invariant factors d_1 | d_2 | ... all >= 2.
struct FgAbelianGroup {
    std::size_t rank = 0;
    std::vector<Int> torsion;

    friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
    /// e.g. "Z^2 + Z/2"; "0" for the trivial group.
    std::string to_string() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& B);

/// Z^rows / column span of B.
FgAbelianGroup cokernel(const IntMatrix& B);

/// Canonical group from a list of cyclic orders (0 means Z); merges coprime parts.
FgAbelianGroup group_from_cyclic_orders(const std::vector<Int>& orders);

/// Columns form a Z-basis of the saturated kernel {x : B x = 0}.
IntMatrix kernel_basis(const IntMatrix& B);

/// Canonical representative of x + column span(B): rows of an echelon basis of
/// the image are subtracted so every pivot coordinate lands in [0, pivot).
/// Throws DimensionMismatch.
IntVector reduce_mod_image(const IntVector& x, const IntMatrix& B);

/// Integer solution of A x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b);

/// Exact determinant (fraction-free elimination). Square matrices only.
Int determinant(const IntMatrix& A);

}  // namespace dimercmg

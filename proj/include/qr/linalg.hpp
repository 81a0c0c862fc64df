/*
   Copyright 2026 The qrlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qr/gf.hpp"

namespace qr {

/// Dense row-major matrix over a finite field. Sizes here are tiny
/// (generator and parity-check matrices), so everything is plain Gaussian
/// elimination.
class Matrix {
  public:
    Matrix(FieldCtx field, std::size_t rows, std::size_t cols)
        : f_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, f_.zero()) {}

    const FieldCtx& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FqElem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const FqElem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<FqElem> row(std::size_t i) const {
        return std::vector<FqElem>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                   a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    void set_row(std::size_t i, const std::vector<FqElem>& v) {
        if (v.size() != cols_) throw std::domain_error("Matrix::set_row: length mismatch");
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.f_ == y.f_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

  private:
    FieldCtx f_;
    std::size_t rows_, cols_;
    std::vector<FqElem> a_;
};

/// Reduced row echelon form; returns the rank. Zero rows are dropped.
inline std::pair<Matrix, std::size_t> rref(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        const FqElem inv = m.at(r, c).inv();
        for (std::size_t j = 0; j < cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const FqElem f = m.at(i, c);
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    Matrix out(m.field(), r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
    return {out, r};
}

inline std::size_t rank(const Matrix& m) { return rref(m).second; }

inline bool row_space_equal(const Matrix& a, const Matrix& b) {
    auto [ra, na] = rref(a);
    auto [rb, nb] = rref(b);
    return na == nb && ra == rb;
}

/// Reduces v against an RREF basis; returns the residual. A zero residual
/// means v lies in the row space.
inline std::vector<FqElem> reduce_against(const Matrix& rref_basis, std::vector<FqElem> v) {
    for (std::size_t i = 0; i < rref_basis.rows(); ++i) {
        std::size_t lead = 0;
        while (lead < rref_basis.cols() && rref_basis.at(i, lead).is_zero()) ++lead;
        if (lead == rref_basis.cols()) continue;
        if (!v[lead].is_zero()) {
            const FqElem f = v[lead];
            for (std::size_t j = 0; j < rref_basis.cols(); ++j) v[j] -= f * rref_basis.at(i, j);
        }
    }
    return v;
}

inline bool in_row_space(const Matrix& rref_basis, const std::vector<FqElem>& v) {
    for (const auto& x : reduce_against(rref_basis, v))
        if (!x.is_zero()) return false;
    return true;
}

/// Basis of the right null space {x : M x^T = 0}, one basis vector per row.
inline Matrix null_space(const Matrix& m) {
    auto [r, rk] = rref(m);
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_col(rk);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < rk; ++i) {
        std::size_t c = 0;
        while (c < cols && r.at(i, c).is_zero()) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    Matrix out(m.field(), cols - rk, cols);
    std::size_t row = 0;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        out.at(row, free) = m.field().one();
        for (std::size_t i = 0; i < rk; ++i) out.at(row, pivot_col[i]) = -r.at(i, free);
        ++row;
    }
    return out;
}

/// Dot product over the field.
inline FqElem dot(const std::vector<FqElem>& a, const std::vector<FqElem>& b) {
    if (a.size() != b.size()) throw std::domain_error("dot: length mismatch");
    if (a.empty()) throw std::domain_error("dot: empty vectors");
    FqElem acc = a[0].field().zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace qr

/*
   Copyright 2026 The ssc Authors

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

#ifndef SSC_MATRIX_HPP
#define SSC_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "galois.hpp"

namespace ssc {

/// Dense row-major matrix over a finite field.
class Matrix {
   public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols) : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols) {}

    /// Rows must all have length `cols`; an empty row list gives a 0 x cols matrix.
    static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
        Matrix m(std::move(f), rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
            for (std::size_t c = 0; c < cols; ++c) {
                if (!m.f_.contains(rows[r][c])) throw InvalidInput("matrix entry outside its field");
                m(r, c) = rows[r][c];
            }
        }
        return m;
    }

    static Matrix identity(Field f, std::size_t n) {
        Matrix m(std::move(f), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = m.f_.one();
        return m;
    }

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec row(std::size_t r) const { return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_); }
    Vec col(std::size_t c) const {
        Vec v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }
    std::vector<Vec> row_list() const {
        std::vector<Vec> out;
        for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
        return out;
    }

    Matrix transpose() const {
        Matrix t(f_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    /// Submatrix on the given columns, in the given order.
    Matrix columns(std::span<const std::size_t> idx) const {
        Matrix s(f_, rows_, idx.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < idx.size(); ++j) s(r, j) = (*this)(r, idx[j]);
        return s;
    }

    Vec apply(const Vec& x) const {
        if (x.size() != cols_) throw InvalidInput("vector length does not match matrix columns");
        Vec y(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            Elem acc;
            for (std::size_t c = 0; c < cols_; ++c) acc = f_.add(acc, f_.mul((*this)(r, c), x[c]));
            y[r] = acc;
        }
        return y;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_ || !(a.f_ == b.f_)) throw InvalidInput("matrix product shape or field mismatch");
        Matrix p(a.f_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Elem x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) = a.f_.add(p(i, j), a.f_.mul(x, b(k, j)));
            }
        return p;
    }

    Matrix embedded(const FieldEmbedding& e) const {
        if (!(e.source() == f_)) throw InvalidInput("embedding source does not match matrix field");
        Matrix m(e.target(), rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = e(a_[i]);
        return m;
    }

    bool is_zero() const {
        for (auto x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

   private:
    Field f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // 0-based, ascending
};

inline RrefResult rref(Matrix m) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        const Elem inv = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Elem factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/**
 * Canonical basis of {x : Mx = 0}: one vector per RREF free column, in
 * increasing free-column order, with a 1 in that column and zeros in the
 * other free columns.
 */
inline std::vector<Vec> kernel_basis(const Matrix& m) {
    const auto [red, rk, pivots] = rref(m);
    const Field& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec x(m.cols());
        x[free] = f.one();
        for (std::size_t i = 0; i < rk; ++i) x[pivots[i]] = f.neg(red(i, free));
        basis.push_back(std::move(x));
    }
    return basis;
}

/**
 * Coefficients with sum_i lambda_i v_i = target, or nullopt when target is
 * outside the span. Free variables are set to zero.
 */
inline std::optional<Vec> solve_membership(const Field& f, std::span<const Vec> vectors, const Vec& target) {
    const std::size_t d = target.size();
    const std::size_t k = vectors.size();
    Matrix aug(f, d, k + 1);
    for (std::size_t j = 0; j < k; ++j) {
        if (vectors[j].size() != d) throw InvalidInput("membership vectors must share the target length");
        for (std::size_t i = 0; i < d; ++i) aug(i, j) = vectors[j][i];
    }
    for (std::size_t i = 0; i < d; ++i) aug(i, k) = target[i];
    const auto [red, rk, pivots] = rref(std::move(aug));
    if (rk > 0 && pivots.back() == k) return std::nullopt;
    Vec lambda(k);
    for (std::size_t i = 0; i < rk; ++i) lambda[pivots[i]] = red(i, k);
    return lambda;
}

/**
 * Incrementally maintained reduced echelon basis; every stored row has a 1
 * at its pivot and zeros at all other rows' pivots.
 */
class EchelonBasis {
   public:
    explicit EchelonBasis(const Field* f) : f_(f) {}

    /// Returns false when v was already in the span.
    bool insert(Vec v) {
        reduce(v);
        std::size_t piv = 0;
        while (piv < v.size() && v[piv].is_zero()) ++piv;
        if (piv == v.size()) return false;
        const Elem inv = f_->inv(v[piv]);
        for (auto& x : v) x = f_->mul(x, inv);
        for (auto& row : rows_) {
            const Elem c = row[piv];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < v.size(); ++j) row[j] = f_->sub(row[j], f_->mul(c, v[j]));
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

    bool contains(Vec v) const {
        reduce(v);
        for (auto x : v)
            if (!x.is_zero()) return false;
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

   private:
    void reduce(Vec& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Elem c = v[pivots_[r]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = f_->sub(v[j], f_->mul(c, rows_[r][j]));
        }
    }

    const Field* f_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace ssc

#endif  // SSC_MATRIX_HPP

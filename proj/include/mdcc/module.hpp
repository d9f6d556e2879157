/*
   Copyright 2026 The mdcc Authors

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

#ifndef MDCC_MODULE_HPP
#define MDCC_MODULE_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace mdcc {

/// Degree shift per coordinate of a free module, a: [1, p] -> Z_+.
class TwistFunction {
   public:
    TwistFunction() = default;
    explicit TwistFunction(std::vector<int> values) : values_(std::move(values)) {
        for (int v : values_)
            if (v < 0) throw DomainError("twist values must be non-negative");
    }
    TwistFunction(std::initializer_list<int> values) : TwistFunction(std::vector<int>(values)) {}
    static TwistFunction zero(std::size_t length) { return TwistFunction(std::vector<int>(length, 0)); }

    std::size_t size() const noexcept { return values_.size(); }
    int operator[](std::size_t i) const { return values_.at(i); }
    const std::vector<int>& values() const noexcept { return values_; }
    int max() const { return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end()); }

    TwistFunction sorted() const {
        auto v = values_;
        std::sort(v.begin(), v.end());
        return TwistFunction(std::move(v));
    }
    TwistFunction without(std::size_t i) const {
        auto v = values_;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        return TwistFunction(std::move(v));
    }

    friend bool operator==(const TwistFunction&, const TwistFunction&) = default;

   private:
    std::vector<int> values_;
};

/// A column (f_1, ..., f_p) in S^p or T^p.
class ModElem {
   public:
    ModElem(Ring ring, std::size_t rank) : ring_(ring), comps_(rank, Poly(ring)) {}
    ModElem(Ring ring, std::vector<Poly> comps) : ring_(ring), comps_(std::move(comps)) {
        for (const auto& c : comps_) require_same_ring(ring_, c.ring(), "ModElem");
    }

    const Ring& ring() const noexcept { return ring_; }
    std::size_t rank() const noexcept { return comps_.size(); }
    const Poly& operator[](std::size_t i) const { return comps_.at(i); }
    Poly& operator[](std::size_t i) { return comps_.at(i); }
    const std::vector<Poly>& components() const noexcept { return comps_; }

    bool is_zero() const noexcept {
        return std::all_of(comps_.begin(), comps_.end(), [](const Poly& f) { return f.is_zero(); });
    }

    friend ModElem operator+(ModElem a, const ModElem& b) {
        check(a, b);
        for (std::size_t i = 0; i < a.rank(); ++i) a.comps_[i] += b.comps_[i];
        return a;
    }
    friend ModElem operator-(ModElem a, const ModElem& b) {
        check(a, b);
        for (std::size_t i = 0; i < a.rank(); ++i) a.comps_[i] -= b.comps_[i];
        return a;
    }
    friend ModElem operator*(const Poly& s, ModElem a) {
        for (auto& c : a.comps_) c = s * c;
        return a;
    }

    friend bool operator==(const ModElem&, const ModElem&) = default;

   private:
    static void check(const ModElem& a, const ModElem& b) {
        require_same_ring(a.ring_, b.ring_, "ModElem");
        if (a.rank() != b.rank()) throw StructuralError("ModElem rank mismatch");
    }

    Ring ring_;
    std::vector<Poly> comps_;
};

/// deg_a(f) = max_i (a(i) + deg f_i); -inf for f = 0.
inline Degree twisted_degree(const ModElem& f, const TwistFunction& a) {
    if (f.rank() != a.size())
        throw StructuralError("twisted_degree: column of length " + std::to_string(f.rank()) +
                              " against twist of length " + std::to_string(a.size()));
    Degree d = Degree::neg_inf();
    for (std::size_t i = 0; i < f.rank(); ++i) d = max(d, f[i].degree() + a[i]);
    return d;
}

inline Degree column_degree(const ModElem& f) { return twisted_degree(f, TwistFunction::zero(f.rank())); }

/**
 * Dense rows x cols matrix of polynomials, row-major. Matrices with zero rows
 * or zero columns are allowed (an empty kernel is such a matrix); the
 * no-zero-column convention is enforced where complexes and codes are built.
 */
class PolyMatrix {
   public:
    PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
        : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ring)) {}

    static PolyMatrix identity(Ring ring, std::size_t n) {
        PolyMatrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(ring, 1);
        return m;
    }
    static PolyMatrix from_columns(Ring ring, std::size_t rows, const std::vector<ModElem>& cols) {
        PolyMatrix m(ring, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
        return m;
    }
    static PolyMatrix from_rows(Ring ring, std::size_t cols, const std::vector<ModElem>& rows) {
        PolyMatrix m(ring, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].rank() != cols) throw StructuralError("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    const Ring& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Poly& operator()(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
    const Poly& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

    ModElem column(std::size_t j) const {
        std::vector<Poly> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return ModElem(ring_, std::move(c));
    }
    std::vector<ModElem> columns() const {
        std::vector<ModElem> out;
        for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
        return out;
    }
    ModElem row(std::size_t i) const {
        std::vector<Poly> r;
        for (std::size_t j = 0; j < cols_; ++j) r.push_back((*this)(i, j));
        return ModElem(ring_, std::move(r));
    }
    void set_column(std::size_t j, const ModElem& c) {
        if (c.rank() != rows_) throw StructuralError("column length mismatch");
        require_same_ring(ring_, c.ring(), "set_column");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    bool is_zero() const noexcept {
        return std::all_of(entries_.begin(), entries_.end(), [](const Poly& f) { return f.is_zero(); });
    }
    bool column_is_zero(std::size_t j) const {
        for (std::size_t i = 0; i < rows_; ++i)
            if (!(*this)(i, j).is_zero()) return false;
        return true;
    }
    bool row_is_zero(std::size_t i) const {
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) return false;
        return true;
    }
    std::ptrdiff_t first_zero_column() const {
        for (std::size_t j = 0; j < cols_; ++j)
            if (column_is_zero(j)) return static_cast<std::ptrdiff_t>(j);
        return -1;
    }

    PolyMatrix transpose() const {
        PolyMatrix t(ring_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    PolyMatrix without_row(std::size_t r) const {
        PolyMatrix m(ring_, rows_ - 1, cols_);
        for (std::size_t i = 0, k = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(i, j);
            ++k;
        }
        return m;
    }
    PolyMatrix without_column(std::size_t c) const {
        PolyMatrix m(ring_, rows_, cols_ - 1);
        for (std::size_t j = 0, k = 0; j < cols_; ++j) {
            if (j == c) continue;
            for (std::size_t i = 0; i < rows_; ++i) m(i, k) = (*this)(i, j);
            ++k;
        }
        return m;
    }

    template <class Fn>
    PolyMatrix map(Fn&& fn) const {
        std::vector<Poly> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) out.push_back(fn(e));
        Ring r = out.empty() ? map_ring(fn) : out.front().ring();
        PolyMatrix m(r, rows_, cols_);
        m.entries_ = std::move(out);
        return m;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        require_same_ring(a.ring_, b.ring_, "matrix product");
        if (a.cols_ != b.rows_)
            throw StructuralError("matrix product of " + a.shape() + " and " + b.shape() + " is undefined");
        PolyMatrix c(a.ring_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) {
                Poly s(a.ring_);
                for (std::size_t k = 0; k < a.cols_; ++k)
                    if (!a(i, k).is_zero() && !b(k, j).is_zero()) s += a(i, k) * b(k, j);
                c(i, j) = std::move(s);
            }
        return c;
    }

    friend ModElem operator*(const PolyMatrix& a, const ModElem& x) {
        require_same_ring(a.ring_, x.ring(), "matrix-vector product");
        if (a.cols_ != x.rank()) throw StructuralError("matrix-vector product: " + a.shape() + " times length " +
                                                       std::to_string(x.rank()));
        ModElem y(a.ring_, a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!a(i, k).is_zero() && !x[k].is_zero()) y[i] += a(i, k) * x[k];
        return y;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

   private:
    template <class Fn>
    Ring map_ring(Fn&& fn) const {
        return fn(Poly(ring_)).ring();
    }

    Ring ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Poly> entries_;
};

/// Column degrees of G relative to the row twist: b(j) = deg_a(G e_j).
inline TwistFunction column_twisted_degrees(const PolyMatrix& g, const TwistFunction& row_twist) {
    std::vector<int> out;
    out.reserve(g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j) {
        auto d = twisted_degree(g.column(j), row_twist);
        if (d.is_neg_inf()) throw DomainError("zero column " + std::to_string(j) + " has no degree");
        out.push_back(d.value());
    }
    return TwistFunction(std::move(out));
}

}  // namespace mdcc

#endif

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

#ifndef MDCC_LINALG_HPP
#define MDCC_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace mdcc::linalg {

/// Dense matrix over F_p, row-major.
class DenseMatrix {
   public:
    DenseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Scalar operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref() {
        const auto& F = field_;
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && (*this)(p, c) == 0) ++p;
            if (p == rows_) continue;
            for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
            Scalar inv = F.inv((*this)(r, c));
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = F.mul((*this)(r, j), inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c) == 0) continue;
                Scalar f = (*this)(i, c);
                for (std::size_t j = c; j < cols_; ++j)
                    if ((*this)(r, j) != 0) (*this)(i, j) = F.sub((*this)(i, j), F.mul(f, (*this)(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        DenseMatrix copy = *this;
        return copy.rref().size();
    }

    /// Basis of {x : A x = 0}.
    std::vector<std::vector<Scalar>> nullspace() const {
        DenseMatrix e = *this;
        auto pivots = e.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Scalar>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Scalar> x(cols_, 0);
            x[free] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = field_.neg(e(r, free));
            basis.push_back(std::move(x));
        }
        return basis;
    }

   private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> a_;
};

/**
 * Incremental sparse row echelon form. Columns are keys ordered by `Greater`;
 * the first entry of a row is its leading (largest) column.
 */
template <class Key, class Greater>
class SparseEchelon {
   public:
    using Entry = std::pair<Key, Scalar>;
    using Row = std::vector<Entry>;

    explicit SparseEchelon(FieldSpec field, Greater greater = Greater{}) : field_(field), greater_(greater), pivots_(greater) {}

    /// Reduces `row` (sorted, largest key first) and keeps it if it is independent. Returns true when kept.
    bool insert(Row row) {
        row = reduce(std::move(row));
        if (row.empty()) return false;
        Scalar inv = field_.inv(row.front().second);
        for (auto& e : row) e.second = field_.mul(e.second, inv);
        Key lead = row.front().first;
        pivots_.emplace(lead, std::move(row));
        return true;
    }

    /// Leading-term reduction until the leading key has no pivot.
    Row reduce(Row row) const {
        std::size_t head = 0;
        Row out;
        while (head < row.size()) {
            auto it = pivots_.find(row[head].first);
            if (it == pivots_.end()) {
                out.insert(out.end(), row.begin() + static_cast<std::ptrdiff_t>(head), row.end());
                return out;
            }
            row = axpy(row, head, it->second, row[head].second);
            head = 0;
        }
        return out;
    }

    std::size_t rank() const noexcept { return pivots_.size(); }
    const std::map<Key, Row, Greater>& pivots() const noexcept { return pivots_; }

    /// row[from..] - c * pivot
    Row axpy(const Row& row, std::size_t from, const Row& pivot, Scalar c) const {
        Row r;
        r.reserve(row.size() - from + pivot.size());
        std::size_t i = from, j = 0;
        while (i < row.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < row.size() && greater_(row[i].first, pivot[j].first))) {
                r.push_back(row[i++]);
            } else if (i == row.size() || greater_(pivot[j].first, row[i].first)) {
                r.push_back({pivot[j].first, field_.neg(field_.mul(c, pivot[j].second))});
                ++j;
            } else {
                auto v = field_.sub(row[i].second, field_.mul(c, pivot[j].second));
                if (v != 0) r.push_back({row[i].first, v});
                ++i;
                ++j;
            }
        }
        return r;
    }

    /// Canonical reduced echelon basis of the span of the pivot rows satisfying `keep`.
    /// Rows are returned in decreasing order of their leading key.
    template <class Pred>
    std::vector<Row> reduced_basis(Pred keep) const {
        std::vector<Row> rows;
        for (const auto& [k, r] : pivots_)
            if (keep(k)) rows.push_back(r);
        // back substitution from the smallest leading key upwards
        std::map<Key, std::size_t, Greater> lead_index(greater_);
        for (std::size_t i = 0; i < rows.size(); ++i) lead_index.emplace(rows[i].front().first, i);
        for (std::size_t i = rows.size(); i-- > 0;) {
            Row& r = rows[i];
            std::size_t pos = 1;
            while (pos < r.size()) {
                auto it = lead_index.find(r[pos].first);
                if (it == lead_index.end() || it->second == i) {
                    ++pos;
                    continue;
                }
                Row head(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
                Row tail = axpy(r, pos, rows[it->second], r[pos].second);
                head.insert(head.end(), tail.begin(), tail.end());
                r = std::move(head);
            }
        }
        return rows;
    }

   private:
    FieldSpec field_;
    Greater greater_;
    std::map<Key, Row, Greater> pivots_;
};

}  // namespace mdcc::linalg

#endif

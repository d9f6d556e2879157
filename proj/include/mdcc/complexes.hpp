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

#ifndef MDCC_COMPLEXES_HPP
#define MDCC_COMPLEXES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "module.hpp"
#include "poly.hpp"

namespace mdcc {

/// Column degree table (a_1, ..., a_l); level k has one entry per column of G_k.
struct DegreeTable {
    std::vector<TwistFunction> levels;

    std::size_t length() const noexcept { return levels.size(); }
    const TwistFunction& operator[](std::size_t k) const { return levels.at(k); }

    /// a_0 = 0 of length q for k = 0, else a_k (1-based).
    TwistFunction level(std::size_t k, std::size_t q) const {
        return k == 0 ? TwistFunction::zero(q) : levels.at(k - 1);
    }

    friend bool operator==(const DegreeTable&, const DegreeTable&) = default;
};

enum class ZeroColumns { reject, allow };

/**
 * A polynomial complex S^{p_l} -G_l-> ... -G_2-> S^{p_1} -G_1-> S^q with
 * G_k G_{k+1} = 0. Stored as (G_1, ..., G_l); index k-1 holds G_k.
 */
class PolyComplex {
   public:
    const Ring& ring() const noexcept { return ring_; }
    std::size_t length() const noexcept { return mats_.size(); }
    std::size_t q() const noexcept { return q_; }
    const std::vector<PolyMatrix>& matrices() const noexcept { return mats_; }
    /// G_k, 1-based.
    const PolyMatrix& G(std::size_t k) const { return mats_.at(k - 1); }

    /// (q; p_1, ..., p_l)
    std::vector<std::size_t> sizes() const {
        std::vector<std::size_t> s{q_};
        for (const auto& m : mats_) s.push_back(m.cols());
        return s;
    }

    friend bool operator==(const PolyComplex&, const PolyComplex&) = default;

   private:
    friend PolyComplex validate_complex(std::vector<PolyMatrix>, ZeroColumns);
    PolyComplex(Ring ring, std::size_t q, std::vector<PolyMatrix> mats) : ring_(ring), q_(q), mats_(std::move(mats)) {}

    Ring ring_;
    std::size_t q_;
    std::vector<PolyMatrix> mats_;
};

/// Checks dimensions, G_k G_{k+1} = 0 and (by default) the absence of zero columns.
inline PolyComplex validate_complex(std::vector<PolyMatrix> mats, ZeroColumns zeros = ZeroColumns::reject) {
    if (mats.empty()) throw StructuralError("a complex needs at least one matrix");
    const Ring ring = mats.front().ring();
    for (std::size_t k = 0; k < mats.size(); ++k) {
        const auto& m = mats[k];
        require_same_ring(ring, m.ring(), "validate_complex");
        if (m.rows() == 0 || m.cols() == 0)
            throw StructuralError("G_" + std::to_string(k + 1) + " has shape " + m.shape());
        if (zeros == ZeroColumns::reject)
            if (auto z = m.first_zero_column(); z >= 0)
                throw DomainError("G_" + std::to_string(k + 1) + " has a zero column (" + std::to_string(z) + ")");
        if (k > 0) {
            if (mats[k - 1].cols() != m.rows())
                throw StructuralError("G_" + std::to_string(k) + " is " + mats[k - 1].shape() + " but G_" +
                                      std::to_string(k + 1) + " is " + m.shape());
            if (!(mats[k - 1] * m).is_zero())
                throw DomainError("G_" + std::to_string(k) + " G_" + std::to_string(k + 1) + " is not zero");
        }
    }
    auto q = mats.front().rows();
    return PolyComplex(ring, q, std::move(mats));
}

/// a_0 = 0, a_{k}(j) = deg_{a_{k-1}}(column j of G_k).
inline DegreeTable column_degree_table(const PolyComplex& g) {
    DegreeTable t;
    TwistFunction prev = TwistFunction::zero(g.q());
    for (const auto& m : g.matrices()) {
        prev = column_twisted_degrees(m, prev);
        t.levels.push_back(prev);
    }
    return t;
}

namespace detail {

template <class EntryFn>
PolyComplex map_entries(const PolyComplex& g, const DegreeTable& table, EntryFn&& fn) {
    std::vector<PolyMatrix> out;
    for (std::size_t k = 1; k <= g.length(); ++k) {
        const auto& m = g.G(k);
        auto rows = table.level(k - 1, g.q());
        const auto& cols = table[k - 1];
        std::optional<PolyMatrix> r;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Poly e = fn(m(i, j), cols[j] - rows[i]);
                if (!r) r.emplace(e.ring(), m.rows(), m.cols());
                (*r)(i, j) = std::move(e);
            }
        out.push_back(std::move(*r));
    }
    return validate_complex(std::move(out), ZeroColumns::allow);
}

}  // namespace detail

/// G^H over T: entry (i, j) of G_k homogenized in degree a_k(j) - a_{k-1}(i).
inline PolyComplex homogenize_complex(const PolyComplex& g) {
    if (g.ring().has_d0()) throw StructuralError("homogenize_complex expects a complex over S");
    return detail::map_entries(g, column_degree_table(g),
                               [](const Poly& f, int d) { return homogenize_in_degree(f, d); });
}

/// D0 := 1 entrywise.
inline PolyComplex dehomogenize_complex(const PolyComplex& g) {
    std::vector<PolyMatrix> out;
    for (const auto& m : g.matrices()) out.push_back(m.map([](const Poly& f) { return dehomogenize(f); }));
    return validate_complex(std::move(out), ZeroColumns::allow);
}

/// G^L: entry (i, j) of G_k is its homogeneous part of degree a_k(j) - a_{k-1}(i).
inline PolyComplex leading_term_complex(const PolyComplex& g) {
    if (g.ring().has_d0()) throw StructuralError("leading_term_complex expects a complex over S");
    auto lead = detail::map_entries(g, column_degree_table(g),
                                    [](const Poly& f, int d) { return homogeneous_part(f, d); });
    // G^L(D) = G^H(0, D)
    auto via_h = homogenize_complex(g);
    for (std::size_t k = 1; k <= g.length(); ++k)
        if (!(lead.G(k) == via_h.G(k).map([](const Poly& f) { return to_S(set_D0_to_zero(f)); })))
            throw std::logic_error("leading term complex disagrees with G^H(0, D)");
    return lead;
}

/// An element of ker G_level that is not in Im G_{level+1} (1-based level).
struct ExactnessWitness {
    std::size_t level;
    ModElem element;
};

/// First place where the complex fails to be a resolution, if any.
inline std::optional<ExactnessWitness> resolution_defect(const PolyComplex& g) {
    for (std::size_t k = 1; k <= g.length(); ++k) {
        auto kernel = syzygy_basis(g.G(k));
        if (kernel.cols() == 0) continue;
        if (k == g.length()) return ExactnessWitness{k, kernel.column(0)};
        auto image = groebner_basis(SubmodulePresentation(g.G(k + 1)), ModuleOrder::untwisted(g.G(k).cols()));
        for (std::size_t j = 0; j < kernel.cols(); ++j)
            if (!membership(kernel.column(j), image)) return ExactnessWitness{k, kernel.column(j)};
    }
    return std::nullopt;
}

/// Exactness of 0 -> S^{p_l} -> ... -> S^{p_1} -> S^q (kernels via syzygies, images via Groebner bases).
inline bool check_resolution(const PolyComplex& g) { return !resolution_defect(g).has_value(); }

/// Why a complex is not reduced: a leading-term kernel element outside the leading-term image.
inline std::optional<ExactnessWitness> reduced_defect(const PolyComplex& g) {
    auto lead = leading_term_complex(g);
    for (std::size_t k = 1; k < lead.length(); ++k)
        if (!(lead.G(k) * lead.G(k + 1)).is_zero())
            throw std::logic_error("leading term complex is not a complex at G_" + std::to_string(k));
    return resolution_defect(lead);
}

inline bool check_reduced(const PolyComplex& g) { return !reduced_defect(g).has_value(); }

inline bool check_pd(const PolyComplex& g) { return check_resolution(g) && check_reduced(g); }

/// A nonzero scalar entry of some G_k^L with k >= 2.
struct ScalarEntry {
    std::size_t level;
    std::size_t row;
    std::size_t col;
    Scalar value;
};

inline std::optional<ScalarEntry> find_scalar_entry(const PolyComplex& g) {
    for (std::size_t k = 2; k <= g.length(); ++k) {
        const auto& m = g.G(k);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m(i, j).is_unit()) return ScalarEntry{k, i, j, m(i, j).leading_term().coef};
    }
    return std::nullopt;
}

/// Scalar-entry witness against minimality of a reduced resolution, or nothing if it is minimal.
inline std::optional<ScalarEntry> minimality_defect(const PolyComplex& g) {
    if (!check_resolution(g)) throw PreconditionError("check_minimal: the complex is not a polynomial resolution");
    if (!check_reduced(g)) throw PreconditionError("check_minimal: the resolution is not reduced");
    if (g.length() == 1) return std::nullopt;
    return find_scalar_entry(leading_term_complex(g));
}

inline bool check_minimal(const PolyComplex& g) { return !minimality_defect(g).has_value(); }

/**
 * Removes trivial summands T(-a) -1-> T(-a) from a graded resolution over T
 * until no G_k (k >= 2) has a nonzero scalar entry.
 *
 * The pivot is the smallest (k, i, j) holding a scalar. Row and column
 * operations clear its row and column; the inverse operations are applied to
 * G_{k-1} and G_{k+1} so the result stays a complex.
 */
inline PolyComplex minimalize_graded(const PolyComplex& r) {
    std::vector<PolyMatrix> g = r.matrices();
    const Ring ring = r.ring();
    const auto& F = ring.field();

    auto find_pivot = [&]() -> std::optional<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> {
        for (std::size_t k = 1; k < g.size(); ++k)
            for (std::size_t i = 0; i < g[k].rows(); ++i)
                for (std::size_t j = 0; j < g[k].cols(); ++j)
                    if (g[k](i, j).is_unit()) return std::make_pair(k, std::make_pair(i, j));
        return std::nullopt;
    };

    while (auto pv = find_pivot()) {
        auto [k, ij] = *pv;
        auto [pi, pj] = ij;
        auto& gk = g[k];
        auto& prev = g[k - 1];
        PolyMatrix* next = k + 1 < g.size() ? &g[k + 1] : nullptr;

        // scale column pj to make the pivot 1; compensate on row pj of G_{k+1}
        Scalar c = gk(pi, pj).leading_term().coef;
        if (c != 1) {
            Scalar ci = F.inv(c);
            for (std::size_t i = 0; i < gk.rows(); ++i) gk(i, pj) = gk(i, pj).scaled(ci);
            if (next)
                for (std::size_t j = 0; j < next->cols(); ++j) (*next)(pj, j) = (*next)(pj, j).scaled(c);
        }
        // clear column pj: row_i -= t row_pi, hence col_pi(G_{k-1}) += t col_i
        for (std::size_t i = 0; i < gk.rows(); ++i) {
            if (i == pi || gk(i, pj).is_zero()) continue;
            Poly t = gk(i, pj);
            for (std::size_t j = 0; j < gk.cols(); ++j)
                if (!gk(pi, j).is_zero()) gk(i, j) -= t * gk(pi, j);
            for (std::size_t a = 0; a < prev.rows(); ++a)
                if (!prev(a, i).is_zero()) prev(a, pi) += prev(a, i) * t;
        }
        // clear row pi: col_j -= s col_pj, hence row_pj(G_{k+1}) += s row_j
        for (std::size_t j = 0; j < gk.cols(); ++j) {
            if (j == pj || gk(pi, j).is_zero()) continue;
            Poly s = gk(pi, j);
            for (std::size_t i = 0; i < gk.rows(); ++i)
                if (!gk(i, pj).is_zero()) gk(i, j) -= s * gk(i, pj);
            if (next)
                for (std::size_t b = 0; b < next->cols(); ++b)
                    if (!(*next)(j, b).is_zero()) (*next)(pj, b) += s * (*next)(j, b);
        }
        if (!prev.column_is_zero(pi) || (next && !next->row_is_zero(pj)))
            throw std::logic_error("minimalize_graded: input is not a complex");

        gk = gk.without_row(pi).without_column(pj);
        prev = prev.without_column(pi);
        if (next) *next = next->without_row(pj);

        // an emptied level truncates the complex there
        for (std::size_t m = 0; m < g.size(); ++m)
            if (g[m].rows() == 0 || g[m].cols() == 0) {
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(m), g.end());
                break;
            }
        if (g.empty()) throw std::logic_error("minimalize_graded: the whole complex cancelled");
    }

    // zero columns left behind are deleted together with the matching (zero) row of the next map
    for (std::size_t k = 0; k < g.size(); ++k) {
        for (std::size_t j = g[k].cols(); j-- > 0;) {
            if (!g[k].column_is_zero(j)) continue;
            if (k + 1 < g.size() && !g[k + 1].row_is_zero(j))
                throw std::logic_error("minimalize_graded: zero column of G_" + std::to_string(k + 1) +
                                       " is hit by G_" + std::to_string(k + 2));
            g[k] = g[k].without_column(j);
            if (k + 1 < g.size()) g[k + 1] = g[k + 1].without_row(j);
        }
        if (g[k].cols() == 0) {
            g.erase(g.begin() + static_cast<std::ptrdiff_t>(k), g.end());
            break;
        }
    }
    if (g.empty()) throw std::logic_error("minimalize_graded: the whole complex cancelled");
    return validate_complex(std::move(g));
}

/// A convolutional code C in S^q given by generator columns.
class CodePresentation {
   public:
    explicit CodePresentation(PolyMatrix generators) : gens_(std::move(generators)) {
        if (gens_.ring().has_d0()) throw StructuralError("a code lives in S^q, not T^q");
        if (gens_.rows() == 0) throw StructuralError("a code needs q >= 1");
    }

    const Ring& ring() const noexcept { return gens_.ring(); }
    std::size_t q() const noexcept { return gens_.rows(); }
    const PolyMatrix& generators() const noexcept { return gens_; }

    bool is_zero() const noexcept { return gens_.is_zero(); }

    /// The generators with zero columns removed.
    PolyMatrix nonzero_generators() const {
        std::vector<ModElem> cols;
        for (const auto& c : gens_.columns())
            if (!c.is_zero()) cols.push_back(c);
        return PolyMatrix::from_columns(ring(), q(), cols);
    }

   private:
    PolyMatrix gens_;
};

struct ResolutionReport {
    PolyComplex complex;
    DegreeTable degree_table;
    bool is_resolution = false;
    bool is_reduced = false;
    bool is_pd = false;
    bool is_minimal = false;
};

/// Resolves the homogenized code C^H over T minimally. The result is over T.
inline PolyComplex graded_minimal_resolution(const CodePresentation& c) {
    if (c.is_zero()) throw DomainError("minimal resolution needs a nontrivial convolutional code");
    const Ring S = c.ring();
    const Ring T = S.homogenized();
    const std::size_t q = c.q();

    // a degree-compatible Groebner basis of C homogenizes to generators of C^H
    auto gb = groebner_basis(SubmodulePresentation(c.nonzero_generators()), ModuleOrder::untwisted(q));
    std::vector<ModElem> hom;
    for (const auto& g : gb.generators()) {
        int d = column_degree(g).value();
        std::vector<Poly> comps;
        for (const auto& f : g.components()) comps.push_back(f.is_zero() ? Poly(T) : homogenize_in_degree(f, d));
        hom.emplace_back(T, std::move(comps));
    }

    std::vector<PolyMatrix> mats;
    TwistFunction row_twist = TwistFunction::zero(q);
    PolyMatrix current = minimal_generators(PolyMatrix::from_columns(T, q, hom), row_twist);
    while (true) {
        mats.push_back(current);
        if (mats.size() > static_cast<std::size_t>(S.n()) + 1)
            throw std::logic_error("graded resolution longer than the syzygy bound");
        auto col_twist = column_twisted_degrees(current, row_twist);
        auto syz = syzygy_basis(current, row_twist);
        if (syz.cols() == 0) break;
        current = minimal_generators(syz, col_twist);
        row_twist = col_twist;
    }
    return minimalize_graded(validate_complex(std::move(mats)));
}

/**
 * Minimal reduced polynomial resolution of C: the dehomogenized minimal
 * graded resolution of C^H. The report's flags come from running the checks.
 */
inline ResolutionReport minimal_resolution(const CodePresentation& c) {
    auto graded = graded_minimal_resolution(c);
    auto graded_table = column_degree_table(graded);
    auto g = validate_complex(dehomogenize_complex(graded).matrices());
    auto table = column_degree_table(g);
    if (!(table == graded_table)) throw std::logic_error("dehomogenized degree table differs from the graded twists");

    ResolutionReport rep{g, table};
    rep.is_resolution = check_resolution(g);
    rep.is_reduced = check_reduced(g);
    rep.is_pd = rep.is_resolution && rep.is_reduced;
    rep.is_minimal = rep.is_pd && check_minimal(g);
    return rep;
}

}  // namespace mdcc

#endif

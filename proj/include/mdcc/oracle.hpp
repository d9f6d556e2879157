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

#ifndef MDCC_ORACLE_HPP
#define MDCC_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "complexes.hpp"
#include "linalg.hpp"
#include "module.hpp"
#include "poly.hpp"

// Brute-force verification by degree-truncated linear algebra over F_p.
// Nothing here calls the Groebner engine.
namespace mdcc::oracle {

/// Coordinate of a truncated free module: monomial at a position, weighted by deg + twist.
struct ColKey {
    int weight;
    Monomial mono;
    std::uint32_t pos;
};

struct ColGreater {
    bool operator()(const ColKey& a, const ColKey& b) const noexcept {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (auto c = grevlex(a.mono, b.mono); c != 0) return c > 0;
        return a.pos < b.pos;
    }
};

using Echelon = linalg::SparseEchelon<ColKey, ColGreater>;
using Row = Echelon::Row;

inline Row to_row(const ModElem& f, const TwistFunction& twist, const Monomial& shift = Monomial{}) {
    Row r;
    for (std::size_t i = 0; i < f.rank(); ++i)
        for (const auto& t : f[i].terms()) {
            Monomial m = t.mono * shift;
            r.push_back({ColKey{static_cast<int>(m.degree()) + twist[i], m, static_cast<std::uint32_t>(i)}, t.coef});
        }
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return ColGreater{}(a.first, b.first); });
    return r;
}

inline ModElem from_row(const Row& r, const Ring& ring, std::size_t rank) {
    std::vector<std::vector<Term>> comps(rank);
    for (const auto& [k, c] : r) comps[k.pos].push_back({k.mono, c});
    std::vector<Poly> polys;
    for (auto& c : comps) polys.push_back(Poly::from_terms(ring, std::move(c)));
    return ModElem(ring, std::move(polys));
}

/// All monomials in the variables D1..Dn (or D0..Dn over T) of total degree exactly d.
inline std::vector<Monomial> monomials_of_degree(const Ring& ring, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    const int first = ring.has_d0() ? 0 : 1;
    Monomial m;
    // distribute d over slots first..n recursively
    auto rec = [&](auto&& self, int slot, int left) -> void {
        if (slot == ring.n()) {
            m.set(slot, static_cast<unsigned>(left));
            out.push_back(m);
            m.set(slot, 0);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m.set(slot, static_cast<unsigned>(e));
            self(self, slot + 1, left - e);
        }
        m.set(slot, 0);
    };
    rec(rec, first, d);
    return out;
}

inline std::vector<Monomial> monomials_up_to(const Ring& ring, int d) {
    std::vector<Monomial> out;
    for (int k = 0; k <= d; ++k) {
        auto part = monomials_of_degree(ring, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

/// A subspace of S^p[-a]_{<=d} in canonical reduced echelon form.
struct TruncatedSpace {
    int degree_bound = 0;
    TwistFunction twist;
    std::vector<Row> rows;  // reduced echelon, decreasing leading key
    int cap_used = 0;
    bool stabilized = true;

    std::size_t dimension() const noexcept { return rows.size(); }
    std::vector<ModElem> basis(const Ring& ring) const {
        std::vector<ModElem> out;
        for (const auto& r : rows) out.push_back(from_row(r, ring, twist.size()));
        return out;
    }
    friend bool operator==(const TruncatedSpace& a, const TruncatedSpace& b) {
        if (a.rows.size() != b.rows.size()) return false;
        for (std::size_t i = 0; i < a.rows.size(); ++i) {
            if (a.rows[i].size() != b.rows[i].size()) return false;
            for (std::size_t j = 0; j < a.rows[i].size(); ++j) {
                const auto& x = a.rows[i][j];
                const auto& y = b.rows[i][j];
                if (!(x.first.mono == y.first.mono) || x.first.pos != y.first.pos || x.second != y.second) return false;
            }
        }
        return true;
    }
};

/**
 * Span of {m g_j : deg(m g_j) <= cap}, grown one degree at a time. With the
 * columns ordered by degree, the rows whose leading key has degree <= d span
 * the intersection with S^q_{<=d}.
 */
class MacaulaySpace {
   public:
    explicit MacaulaySpace(const CodePresentation& c)
        : ring_(c.ring()), echelon_(c.ring().field()), zero_(TwistFunction::zero(c.q())) {
        for (const auto& g : c.generators().columns())
            if (!g.is_zero()) gens_.push_back({g, column_degree(g).value()});
    }

    int cap() const noexcept { return cap_; }

    void grow_to(int cap) {
        while (cap_ < cap) {
            ++cap_;
            for (const auto& [g, deg] : gens_)
                for (const auto& m : monomials_of_degree(ring_, cap_ - deg)) echelon_.insert(to_row(g, zero_, m));
        }
    }

    std::size_t dimension(int d) const {
        std::size_t n = 0;
        for (const auto& [k, r] : echelon_.pivots())
            if (k.weight <= d) ++n;
        return n;
    }

    TruncatedSpace space(int d) const {
        TruncatedSpace s;
        s.degree_bound = d;
        s.twist = zero_;
        s.cap_used = cap_;
        s.rows = echelon_.reduced_basis([d](const ColKey& k) { return k.weight <= d; });
        return s;
    }

   private:
    struct Gen {
        ModElem g;
        int deg;
    };
    Ring ring_;
    Echelon echelon_;
    TwistFunction zero_;
    std::vector<Gen> gens_;
    int cap_ = -1;
};

inline int max_generator_degree(const CodePresentation& c) {
    int m = 0;
    for (const auto& g : c.generators().columns())
        if (!g.is_zero()) m = std::max(m, column_degree(g).value());
    return m;
}

/// Default starting cap: d + 2 * (largest generator degree).
inline int default_cap(const CodePresentation& c, int d) { return d + 2 * max_generator_degree(c); }

inline constexpr int kCapHeadroom = 24;

/**
 * Grows the Macaulay space from `cap` until the dimensions for every degree
 * 0..d_max stay unchanged over two consecutive increments. A heuristic, not a
 * proof of convergence; `stabilized` is false when the headroom ran out first.
 */
inline MacaulaySpace stabilized_space(const CodePresentation& c, int d_max, int cap, bool& stabilized) {
    MacaulaySpace ms(c);
    ms.grow_to(std::max(cap, d_max));
    auto dims = [&] {
        std::vector<std::size_t> v;
        for (int d = 0; d <= d_max; ++d) v.push_back(ms.dimension(d));
        return v;
    };
    auto last = dims();
    int stable = 0;
    const int limit = ms.cap() + kCapHeadroom;
    while (stable < 2 && ms.cap() < limit) {
        ms.grow_to(ms.cap() + 1);
        auto now = dims();
        stable = now == last ? stable + 1 : 0;
        last = std::move(now);
    }
    stabilized = stable >= 2;
    return ms;
}

/// C_{<=d} = C ∩ S^q_{<=d}.
inline TruncatedSpace truncated_code_space(const CodePresentation& c, int d, int cap) {
    if (cap < d) throw PreconditionError("truncated_code_space: cap must be at least d");
    bool stable = false;
    auto ms = stabilized_space(c, d, cap, stable);
    auto s = ms.space(d);
    s.stabilized = stable;
    return s;
}

inline TruncatedSpace truncated_code_space(const CodePresentation& c, int d) {
    return truncated_code_space(c, d, default_cap(c, d));
}

/// dim C_{<=d} for d = 0..d_max from a single elimination.
inline std::vector<std::size_t> hilbert_oracle_range(const CodePresentation& c, int d_max) {
    bool stable = false;
    auto ms = stabilized_space(c, d_max, default_cap(c, d_max), stable);
    std::vector<std::size_t> out;
    for (int d = 0; d <= d_max; ++d) out.push_back(ms.dimension(d));
    return out;
}

inline std::size_t hilbert_oracle(const CodePresentation& c, int d) {
    if (d < 0) return 0;
    return hilbert_oracle_range(c, d).back();
}

/// Index of the coordinates (m, pos) with deg m + twist(pos) <= d.
class TruncatedCoordinates {
   public:
    TruncatedCoordinates(const Ring& ring, const TwistFunction& twist, int d) {
        for (std::size_t pos = 0; pos < twist.size(); ++pos)
            for (const auto& m : monomials_up_to(ring, d - twist[pos])) {
                index_.emplace(ColKey{static_cast<int>(m.degree()) + twist[pos], m, static_cast<std::uint32_t>(pos)},
                               keys_.size());
                keys_.push_back({m, pos});
            }
    }
    std::size_t size() const noexcept { return keys_.size(); }
    const Monomial& monomial(std::size_t i) const { return keys_[i].first; }
    std::size_t position(std::size_t i) const { return keys_[i].second; }
    std::size_t index(const ColKey& k) const {
        auto it = index_.find(k);
        if (it == index_.end()) throw std::logic_error("coordinate outside the truncated module");
        return it->second;
    }

   private:
    std::map<ColKey, std::size_t, ColGreater> index_;
    std::vector<std::pair<Monomial, std::size_t>> keys_;
};

/// Matrix of G : S^p[-col]_{<=d} -> S^q[-row]_{<=cod_d} in monomial coordinates (cod_d defaults to d).
inline linalg::DenseMatrix truncated_map(const PolyMatrix& g, const TwistFunction& row_twist,
                                         const TwistFunction& col_twist, int d, std::optional<int> cod_d = {}) {
    TruncatedCoordinates dom(g.ring(), col_twist, d), cod(g.ring(), row_twist, cod_d.value_or(d));
    linalg::DenseMatrix a(g.ring().field(), cod.size(), dom.size());
    for (std::size_t c = 0; c < dom.size(); ++c) {
        auto image = to_row(g.column(dom.position(c)), row_twist, dom.monomial(c));
        for (const auto& [k, v] : image) a(cod.index(k), c) = v;
    }
    return a;
}

/**
 * Exactness of 0 -> S^{p_l}[-a_l]_{<=d} -> ... -> S^{p_1}[-a_1]_{<=d} -> C_{<=d} -> 0
 * by rank-nullity at every stage, with C = Im G_1.
 */
inline bool truncated_exactness(const PolyComplex& g, int d) {
    if (g.ring().has_d0()) throw StructuralError("truncated_exactness expects a complex over S");
    auto table = column_degree_table(g);
    std::vector<std::size_t> rank(g.length() + 2, 0), dim(g.length() + 1, 0);
    for (std::size_t k = 1; k <= g.length(); ++k) {
        auto a = truncated_map(g.G(k), table.level(k - 1, g.q()), table[k - 1], d);
        rank[k] = a.rank();
        dim[k] = a.cols();
    }
    for (std::size_t k = 1; k <= g.length(); ++k)
        if (dim[k] - rank[k] != rank[k + 1]) return false;
    return rank[1] == hilbert_oracle(CodePresentation(g.G(1)), d);
}

/// dim of the truncated kernel, and a basis of {y in S^r_{<=d} : G y = 0} (y with twist 0).
inline std::vector<ModElem> truncated_kernel(const PolyMatrix& g, int d) {
    auto zero_cols = TwistFunction::zero(g.cols());
    // images of degree <= d columns reach degree d + (largest entry degree)
    int shift = 0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (!g(i, j).is_zero()) shift = std::max(shift, g(i, j).degree().value());
    auto a = truncated_map(g, TwistFunction::zero(g.rows()), zero_cols, d, d + shift);
    TruncatedCoordinates dom(g.ring(), zero_cols, d);
    std::vector<ModElem> out;
    for (const auto& v : a.nullspace()) {
        ModElem y(g.ring(), g.cols());
        for (std::size_t c = 0; c < dom.size(); ++c)
            if (v[c] != 0) y[dom.position(c)] += Poly::monomial(g.ring(), dom.monomial(c), v[c]);
        out.push_back(std::move(y));
    }
    return out;
}

/**
 * Rebuilds C_{<=d} for m < d <= d_max from C_{<=m} alone via
 * C_{<=d} = C_{<=d-1} + D_1 C_{<=d-1} + ... + D_n C_{<=d-1},
 * and compares with the directly computed truncations.
 */
inline bool memory_recovery_check(const CodePresentation& c, int m, int d_max) {
    bool stable = false;
    auto ms = stabilized_space(c, d_max, default_cap(c, d_max), stable);
    const Ring& ring = c.ring();
    const auto zero = TwistFunction::zero(c.q());
    std::vector<ModElem> current = m >= 0 ? ms.space(m).basis(ring) : std::vector<ModElem>{};
    for (int d = std::max(m + 1, 0); d <= d_max; ++d) {
        Echelon e(ring.field());
        for (const auto& v : current) {
            e.insert(to_row(v, zero));
            for (int i = 1; i <= ring.n(); ++i) e.insert(to_row(v, zero, Monomial::variable(i)));
        }
        TruncatedSpace candidate;
        candidate.twist = zero;
        candidate.rows = e.reduced_basis([](const ColKey&) { return true; });
        if (!(candidate == ms.space(d))) return false;
        current = candidate.basis(ring);
    }
    return true;
}

/**
 * Number of minimal generators in each degree 0..max_deg of the graded
 * submodule of T^q generated by homogeneous columns: dim M_δ - dim (D_0..D_n) M_{δ-1}.
 */
inline std::vector<std::size_t> graded_minimal_generator_counts(const PolyMatrix& gens, const TwistFunction& twist,
                                                                int max_deg) {
    const Ring& ring = gens.ring();
    std::vector<std::size_t> counts;
    std::vector<ModElem> prev;  // basis of M_{δ-1}
    for (int delta = 0; delta <= max_deg; ++delta) {
        Echelon from_below(ring.field());
        for (const auto& v : prev)
            for (int i = ring.has_d0() ? 0 : 1; i <= ring.n(); ++i) from_below.insert(to_row(v, twist, Monomial::variable(i)));
        Echelon full = from_below;
        for (const auto& g : gens.columns()) {
            if (g.is_zero()) continue;
            int deg = twisted_degree(g, twist).value();
            for (const auto& m : monomials_of_degree(ring, delta - deg)) full.insert(to_row(g, twist, m));
        }
        counts.push_back(full.rank() - from_below.rank());
        TruncatedSpace s;
        s.twist = twist;
        s.rows = full.reduced_basis([](const ColKey&) { return true; });
        prev = s.basis(ring);
    }
    return counts;
}

}  // namespace mdcc::oracle

#endif

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

#ifndef MDCC_GROEBNER_HPP
#define MDCC_GROEBNER_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "module.hpp"
#include "poly.hpp"

namespace mdcc {

/**
 * Degree-compatible term-over-position order on a free module with a twist.
 *
 * A term m e_i has weight deg(m) + twist(i). Terms compare by weight, then by
 * grevlex on m, and among equal monomials the smaller position is larger.
 */
class ModuleOrder {
   public:
    explicit ModuleOrder(TwistFunction twist) : twist_(std::move(twist)) {}
    static ModuleOrder untwisted(std::size_t rank) { return ModuleOrder(TwistFunction::zero(rank)); }

    const TwistFunction& twist() const noexcept { return twist_; }
    std::size_t rank() const noexcept { return twist_.size(); }

    int weight(const Monomial& m, std::size_t pos) const {
        return static_cast<int>(m.degree()) + twist_.values()[pos];
    }

    std::strong_ordering compare(const Monomial& a, std::size_t ia, const Monomial& b, std::size_t ib) const {
        if (auto c = weight(a, ia) <=> weight(b, ib); c != 0) return c;
        if (auto c = grevlex(a, b); c != 0) return c;
        return ib <=> ia;
    }

    friend bool operator==(const ModuleOrder&, const ModuleOrder&) = default;

   private:
    TwistFunction twist_;
};

namespace detail {

struct ModTerm {
    Monomial mono;
    std::uint32_t pos;
    Scalar coef;
    friend bool operator==(const ModTerm&, const ModTerm&) = default;
};

/// Sparse module element: terms strictly decreasing in a ModuleOrder.
using ModVec = std::vector<ModTerm>;

inline ModVec to_modvec(const ModElem& f, const ModuleOrder& ord) {
    ModVec v;
    for (std::size_t i = 0; i < f.rank(); ++i)
        for (const auto& t : f[i].terms()) v.push_back({t.mono, static_cast<std::uint32_t>(i), t.coef});
    std::sort(v.begin(), v.end(),
              [&](const ModTerm& a, const ModTerm& b) { return ord.compare(a.mono, a.pos, b.mono, b.pos) > 0; });
    return v;
}

inline ModElem to_elem(const ModVec& v, const Ring& ring, std::size_t rank) {
    // within one position the terms already come in decreasing grevlex order
    std::vector<std::vector<Term>> comps(rank);
    for (const auto& t : v) comps[t.pos].push_back({t.mono, t.coef});
    std::vector<Poly> polys;
    polys.reserve(rank);
    for (auto& c : comps) polys.push_back(Poly::from_sorted(ring, std::move(c)));
    return ModElem(ring, std::move(polys));
}

/// f[from..] - c * m * g
inline ModVec sub_scaled(const ModVec& f, std::size_t from, const ModVec& g, Scalar c, const Monomial& m,
                         const ModuleOrder& ord, const FieldSpec& F) {
    ModVec r;
    r.reserve(f.size() - from + g.size());
    std::size_t i = from, j = 0;
    while (i < f.size() || j < g.size()) {
        if (j == g.size()) {
            r.push_back(f[i++]);
            continue;
        }
        Monomial gm = g[j].mono * m;
        auto cmp = i == f.size() ? std::strong_ordering::less : ord.compare(f[i].mono, f[i].pos, gm, g[j].pos);
        if (cmp > 0) {
            r.push_back(f[i++]);
        } else if (cmp < 0) {
            r.push_back({gm, g[j].pos, F.neg(F.mul(c, g[j].coef))});
            ++j;
        } else {
            auto v = F.sub(f[i].coef, F.mul(c, g[j].coef));
            if (v != 0) r.push_back({f[i].mono, f[i].pos, v});
            ++i;
            ++j;
        }
    }
    return r;
}

inline ModVec scaled(const ModVec& g, Scalar c, const Monomial& m, const FieldSpec& F) {
    ModVec r;
    r.reserve(g.size());
    for (const auto& t : g) r.push_back({t.mono * m, t.pos, F.mul(t.coef, c)});
    return r;
}

/// An element together with its coordinates in the original generators.
struct Tracked {
    ModVec vec;
    std::vector<Poly> cof;  // empty when coordinates are not tracked
};

inline void cof_sub(std::vector<Poly>& cof, const std::vector<Poly>& other, Scalar c, const Monomial& m) {
    for (std::size_t k = 0; k < cof.size(); ++k)
        if (!other[k].is_zero()) cof[k] -= other[k].scaled(c, m);
}

inline void make_monic(Tracked& t, const FieldSpec& F) {
    auto inv = F.inv(t.vec.front().coef);
    if (inv == 1) return;
    for (auto& term : t.vec) term.coef = F.mul(term.coef, inv);
    for (auto& c : t.cof) c = c.scaled(inv);
}

struct Reducer {
    const Ring& ring;
    const ModuleOrder& ord;

    /// Index of a basis element whose leading term divides (m, pos), skipping `skip`.
    std::ptrdiff_t find_divisor(const std::vector<Tracked>& basis, const Monomial& m, std::uint32_t pos,
                                std::ptrdiff_t skip = -1) const {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (static_cast<std::ptrdiff_t>(k) == skip || basis[k].vec.empty()) continue;
            const auto& lt = basis[k].vec.front();
            if (lt.pos == pos && lt.mono.divides(m)) return static_cast<std::ptrdiff_t>(k);
        }
        return -1;
    }

    /**
     * Full division of f by the basis. Every term of the remainder is
     * irreducible. Optionally records quotients (f = sum q_k b_k + remainder)
     * and keeps f's coordinates in the original generators current.
     */
    ModVec reduce(ModVec f, const std::vector<Tracked>& basis, std::vector<Poly>* cof = nullptr,
                  std::vector<Poly>* quotients = nullptr, std::ptrdiff_t skip = -1, bool keep_head = false) const {
        const auto& F = ring.field();
        ModVec rem;
        std::size_t head = 0;
        if (keep_head && !f.empty()) {
            rem.push_back(f.front());
            head = 1;
        }
        while (head < f.size()) {
            const auto t = f[head];
            auto k = find_divisor(basis, t.mono, t.pos, skip);
            if (k < 0) {
                rem.push_back(t);
                ++head;
                continue;
            }
            const auto& b = basis[static_cast<std::size_t>(k)];
            const auto& lt = b.vec.front();
            Scalar c = F.mul(t.coef, F.inv(lt.coef));
            Monomial m = lt.mono.quotient_of(t.mono);
            f = sub_scaled(f, head, b.vec, c, m, ord, F);
            head = 0;
            if (cof && !b.cof.empty()) cof_sub(*cof, b.cof, c, m);
            if (quotients) (*quotients)[static_cast<std::size_t>(k)] += Poly::monomial(ring, m, c);
        }
        return rem;
    }
};

/// Buchberger completion with pairs restricted to equal leading positions.
inline std::vector<Tracked> buchberger(const std::vector<ModElem>& gens, const Ring& ring, const ModuleOrder& ord,
                                       bool track) {
    const auto& F = ring.field();
    Reducer red{ring, ord};
    std::vector<Tracked> basis;

    struct Pair {
        int weight;
        Monomial lcm;
        std::size_t i, j, seq;
    };
    auto later = [](const Pair& a, const Pair& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (auto c = grevlex(a.lcm, b.lcm); c != 0) return c > 0;
        return a.seq > b.seq;
    };
    std::priority_queue<Pair, std::vector<Pair>, decltype(later)> queue(later);
    std::set<std::pair<std::size_t, std::size_t>> pending;
    std::size_t seq = 0;

    auto add = [&](Tracked t) {
        make_monic(t, F);
        std::size_t k = basis.size();
        const auto& lt = t.vec.front();
        for (std::size_t i = 0; i < k; ++i) {
            const auto& li = basis[i].vec.front();
            if (li.pos != lt.pos) continue;
            auto l = lcm(li.mono, lt.mono);
            queue.push({ord.weight(l, lt.pos), l, i, k, seq++});
            pending.insert({i, k});
        }
        basis.push_back(std::move(t));
    };

    for (std::size_t g = 0; g < gens.size(); ++g) {
        Tracked t{to_modvec(gens[g], ord), {}};
        if (track) {
            t.cof.assign(gens.size(), Poly(ring));
            t.cof[g] = Poly::constant(ring, 1);
        }
        t.vec = red.reduce(std::move(t.vec), basis, track ? &t.cof : nullptr);
        if (!t.vec.empty()) add(std::move(t));
    }

    while (!queue.empty()) {
        Pair pr = queue.top();
        queue.pop();
        pending.erase({pr.i, pr.j});
        // chain criterion: some k with LT_k | lcm whose pairs with i and j are already handled
        bool redundant = false;
        auto pos = basis[pr.i].vec.front().pos;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == pr.i || k == pr.j) continue;
            const auto& lk = basis[k].vec.front();
            if (lk.pos != pos || !lk.mono.divides(pr.lcm)) continue;
            auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) redundant = true;
        }
        if (redundant) continue;

        const auto& gi = basis[pr.i];
        const auto& gj = basis[pr.j];
        Monomial mi = gi.vec.front().mono.quotient_of(pr.lcm);
        Monomial mj = gj.vec.front().mono.quotient_of(pr.lcm);
        Tracked s{sub_scaled(scaled(gi.vec, 1, mi, F), 0, gj.vec, 1, mj, ord, F), {}};
        if (track) {
            s.cof.assign(gens.size(), Poly(ring));
            for (std::size_t k = 0; k < s.cof.size(); ++k)
                s.cof[k] = gi.cof[k].scaled(1, mi) - gj.cof[k].scaled(1, mj);
        }
        s.vec = red.reduce(std::move(s.vec), basis, track ? &s.cof : nullptr);
        if (!s.vec.empty()) add(std::move(s));
    }
    return basis;
}

/// Minimalizes, tail-reduces, normalizes and sorts a Groebner basis.
inline std::vector<Tracked> interreduce(std::vector<Tracked> basis, const Ring& ring, const ModuleOrder& ord) {
    std::vector<bool> drop(basis.size(), false);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& li = basis[i].vec.front();
        for (std::size_t j = 0; j < basis.size() && !drop[i]; ++j) {
            if (i == j) continue;
            const auto& lj = basis[j].vec.front();
            if (lj.pos != li.pos || !lj.mono.divides(li.mono)) continue;
            // equal leading monomials: keep the earliest
            drop[i] = !(lj.mono == li.mono) || j < i;
        }
    }
    std::vector<Tracked> kept;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!drop[i]) kept.push_back(std::move(basis[i]));
    Reducer red{ring, ord};
    for (std::size_t i = 0; i < kept.size(); ++i) {
        auto cof = kept[i].cof;
        kept[i].vec = red.reduce(std::move(kept[i].vec), kept, cof.empty() ? nullptr : &cof,
                                 nullptr, static_cast<std::ptrdiff_t>(i), true);
        kept[i].cof = std::move(cof);
        make_monic(kept[i], ring.field());
    }
    std::sort(kept.begin(), kept.end(), [&](const Tracked& a, const Tracked& b) {
        const auto& x = a.vec.front();
        const auto& y = b.vec.front();
        return ord.compare(x.mono, x.pos, y.mono, y.pos) > 0;
    });
    return kept;
}

}  // namespace detail

/// Generators of a submodule of S^q or T^q, with the twist of the ambient module.
class SubmodulePresentation {
   public:
    explicit SubmodulePresentation(PolyMatrix generators)
        : SubmodulePresentation(generators, TwistFunction::zero(generators.rows())) {}
    SubmodulePresentation(PolyMatrix generators, TwistFunction ambient_twist)
        : gens_(std::move(generators)), twist_(std::move(ambient_twist)) {
        if (gens_.rows() == 0) throw StructuralError("ambient rank must be at least 1");
        if (gens_.cols() == 0) throw DomainError("a submodule presentation needs at least one generator");
        if (auto z = gens_.first_zero_column(); z >= 0)
            throw DomainError("generator " + std::to_string(z) + " is the zero column");
        if (twist_.size() != gens_.rows()) throw StructuralError("ambient twist length differs from ambient rank");
    }

    const PolyMatrix& generators() const noexcept { return gens_; }
    const TwistFunction& twist() const noexcept { return twist_; }
    const Ring& ring() const noexcept { return gens_.ring(); }
    std::size_t ambient_rank() const noexcept { return gens_.rows(); }

   private:
    PolyMatrix gens_;
    TwistFunction twist_;
};

/**
 * A reduced Groebner basis: monic, leading terms pairwise non-divisible,
 * sorted by leading term descending. Canonical for (module, order).
 */
class GroebnerBasis {
   public:
    GroebnerBasis(Ring ring, ModuleOrder order, std::vector<detail::Tracked> elems, bool reduced)
        : ring_(ring), order_(std::move(order)), elems_(std::move(elems)), reduced_(reduced) {}

    const Ring& ring() const noexcept { return ring_; }
    const ModuleOrder& order() const noexcept { return order_; }
    std::size_t rank() const noexcept { return order_.rank(); }
    std::size_t size() const noexcept { return elems_.size(); }
    bool reduced() const noexcept { return reduced_; }

    std::vector<ModElem> generators() const {
        std::vector<ModElem> out;
        for (const auto& e : elems_) out.push_back(detail::to_elem(e.vec, ring_, rank()));
        return out;
    }
    /// Coordinates of each basis element in the input generators (when tracked).
    const std::vector<detail::Tracked>& tracked() const noexcept { return elems_; }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        if (!(a.ring_ == b.ring_) || !(a.order_ == b.order_) || a.elems_.size() != b.elems_.size()) return false;
        for (std::size_t i = 0; i < a.elems_.size(); ++i)
            if (a.elems_[i].vec != b.elems_[i].vec) return false;
        return true;
    }

   private:
    Ring ring_;
    ModuleOrder order_;
    std::vector<detail::Tracked> elems_;
    bool reduced_;
};

namespace detail {

inline GroebnerBasis groebner_of(const std::vector<ModElem>& gens, const Ring& ring, const ModuleOrder& ord,
                                 bool track) {
    for (const auto& g : gens) {
        require_same_ring(ring, g.ring(), "groebner_basis");
        if (g.rank() != ord.rank()) throw StructuralError("generator rank differs from the order's rank");
    }
    auto basis = interreduce(buchberger(gens, ring, ord, track), ring, ord);
    return GroebnerBasis(ring, ord, std::move(basis), true);
}

}  // namespace detail

inline GroebnerBasis groebner_basis(const SubmodulePresentation& m, const ModuleOrder& ord) {
    if (ord.rank() != m.ambient_rank()) throw StructuralError("order rank differs from the ambient rank");
    return detail::groebner_of(m.generators().columns(), m.ring(), ord, false);
}

/// Reduced basis for the degree-compatible order carried by the ambient twist.
inline GroebnerBasis groebner_basis(const SubmodulePresentation& m) {
    return groebner_basis(m, ModuleOrder(m.twist()));
}

inline ModElem normal_form(const ModElem& f, const GroebnerBasis& gb) {
    require_same_ring(f.ring(), gb.ring(), "normal_form");
    if (f.rank() != gb.rank())
        throw StructuralError("normal_form: element of rank " + std::to_string(f.rank()) + " against basis of rank " +
                              std::to_string(gb.rank()));
    detail::Reducer red{gb.ring(), gb.order()};
    auto rem = red.reduce(detail::to_modvec(f, gb.order()), gb.tracked());
    return detail::to_elem(rem, gb.ring(), gb.rank());
}

inline bool membership(const ModElem& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

inline bool membership(const ModElem& f, const SubmodulePresentation& m) {
    if (f.rank() != m.ambient_rank()) throw StructuralError("membership: rank mismatch");
    if (f.is_zero()) return true;
    return membership(f, groebner_basis(m));
}

inline bool module_equal(const SubmodulePresentation& a, const SubmodulePresentation& b) {
    require_same_ring(a.ring(), b.ring(), "module_equal");
    if (a.ambient_rank() != b.ambient_rank()) throw StructuralError("module_equal: ambient ranks differ");
    auto ord = ModuleOrder::untwisted(a.ambient_rank());
    return groebner_basis(a, ord) == groebner_basis(b, ord);
}

/**
 * Generators of {y : G y = 0}. Schreyer syzygies of a Groebner basis of the
 * columns, pulled back to the columns themselves, plus the relations that
 * express each column through the basis. An empty (zero-column) result means G is injective.
 *
 * For homogeneous G (with respect to row_twist) the result is homogeneous
 * with respect to the column degrees of G.
 */
inline PolyMatrix syzygy_basis(const PolyMatrix& G, const TwistFunction& row_twist) {
    const Ring& ring = G.ring();
    const std::size_t r = G.cols();
    if (row_twist.size() != G.rows()) throw StructuralError("syzygy_basis: row twist length differs from row count");
    ModuleOrder ord(row_twist);
    auto cols = G.columns();
    auto gb = detail::groebner_of(cols, ring, ord, true);
    const auto& basis = gb.tracked();
    const auto& F = ring.field();
    detail::Reducer red{ring, ord};

    std::vector<ModElem> syz;
    auto push = [&](std::vector<Poly> v) {
        ModElem e(ring, std::move(v));
        if (e.is_zero()) return;
        for (const auto& s : syz)
            if (s == e) return;
        syz.push_back(std::move(e));
    };
    // coordinates w.r.t. the basis -> coordinates w.r.t. the columns of G
    auto pull_back = [&](const std::vector<Poly>& coords) {
        std::vector<Poly> out(r, Poly(ring));
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (!coords[k].is_zero())
                for (std::size_t j = 0; j < r; ++j)
                    if (!basis[k].cof[j].is_zero()) out[j] += coords[k] * basis[k].cof[j];
        return out;
    };

    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const auto& li = basis[i].vec.front();
            const auto& lj = basis[j].vec.front();
            if (li.pos != lj.pos) continue;
            auto l = lcm(li.mono, lj.mono);
            Monomial mi = li.mono.quotient_of(l), mj = lj.mono.quotient_of(l);
            auto s = detail::sub_scaled(detail::scaled(basis[i].vec, 1, mi, F), 0, basis[j].vec, 1, mj, ord, F);
            std::vector<Poly> q(basis.size(), Poly(ring));
            auto rem = red.reduce(std::move(s), basis, nullptr, &q);
            if (!rem.empty()) throw std::logic_error("syzygy_basis: S-pair did not reduce to zero");
            for (auto& x : q) x = -x;
            q[i] += Poly::monomial(ring, mi);
            q[j] -= Poly::monomial(ring, mj);
            push(pull_back(q));
        }

    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Poly> q(basis.size(), Poly(ring));
        auto rem = red.reduce(detail::to_modvec(cols[j], ord), basis, nullptr, &q);
        if (!rem.empty()) throw std::logic_error("syzygy_basis: column did not reduce to zero");
        auto v = pull_back(q);
        for (auto& x : v) x = -x;
        v[j] += Poly::constant(ring, 1);
        push(std::move(v));
    }
    return PolyMatrix::from_columns(ring, r, syz);
}

inline PolyMatrix syzygy_basis(const PolyMatrix& G) { return syzygy_basis(G, TwistFunction::zero(G.rows())); }

/// Rows generate {h : h G = 0}.
inline PolyMatrix left_kernel(const PolyMatrix& G) { return syzygy_basis(G.transpose()).transpose(); }

/// Twisted degree of a homogeneous column; throws DomainError when the column is not homogeneous.
inline int homogeneous_degree(const ModElem& f, const TwistFunction& twist) {
    std::optional<int> deg;
    for (std::size_t i = 0; i < f.rank(); ++i)
        for (const auto& t : f[i].terms()) {
            int d = static_cast<int>(t.mono.degree()) + twist[i];
            if (deg && *deg != d) throw DomainError("generator is not homogeneous with respect to the twist");
            deg = d;
        }
    if (!deg) throw DomainError("the zero column has no degree");
    return *deg;
}

/**
 * A minimal homogeneous generating set, chosen greedily among the given
 * generators in order of increasing degree. Zero generators are dropped.
 * The count and degree multiset are invariants of the graded module.
 */
inline PolyMatrix minimal_generators(const PolyMatrix& gens, const TwistFunction& twist) {
    const Ring& ring = gens.ring();
    if (twist.size() != gens.rows()) throw StructuralError("minimal_generators: twist length differs from rank");
    std::vector<std::pair<int, std::size_t>> order;
    for (std::size_t j = 0; j < gens.cols(); ++j) {
        auto col = gens.column(j);
        if (col.is_zero()) continue;
        order.push_back({homogeneous_degree(col, twist), j});
    }
    std::stable_sort(order.begin(), order.end(), [](auto& a, auto& b) { return a.first < b.first; });

    ModuleOrder ord(twist);
    std::vector<ModElem> kept;
    std::optional<GroebnerBasis> gb;
    for (auto [deg, j] : order) {
        auto col = gens.column(j);
        if (gb && membership(col, *gb)) continue;
        kept.push_back(col);
        gb = detail::groebner_of(kept, ring, ord, false);
    }
    return PolyMatrix::from_columns(ring, gens.rows(), kept);
}

inline PolyMatrix minimal_generators(const SubmodulePresentation& m, const TwistFunction& twist) {
    return minimal_generators(m.generators(), twist);
}

}  // namespace mdcc

#endif

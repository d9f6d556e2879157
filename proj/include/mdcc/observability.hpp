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

#ifndef MDCC_OBSERVABILITY_HPP
#define MDCC_OBSERVABILITY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "complexes.hpp"
#include "groebner.hpp"
#include "linalg.hpp"

namespace mdcc {

struct ObservabilityReport {
    bool observable = false;
    std::optional<PolyMatrix> parity_check;  // rows generate the left kernel of the generators
    std::optional<ModElem> witness;          // in ker H but not in C: a torsion class of S^q / C
};

/**
 * C is observable iff S^q / C is torsion free iff C = ker H for H the left
 * kernel of its generator matrix.
 */
inline ObservabilityReport is_observable(const CodePresentation& c) {
    if (c.is_zero()) throw DomainError("observability needs a nontrivial convolutional code");
    auto g = c.nonzero_generators();
    auto h = left_kernel(g);
    auto k = h.rows() == 0 ? PolyMatrix::identity(c.ring(), c.q()) : syzygy_basis(h);

    ObservabilityReport rep;
    auto gb = groebner_basis(SubmodulePresentation(g));
    for (std::size_t j = 0; j < k.cols(); ++j)
        if (!membership(k.column(j), gb)) {
            rep.witness = k.column(j);
            return rep;
        }
    rep.observable = true;
    rep.parity_check = h;
    return rep;
}

namespace detail {

/// Dense univariate polynomial over F_p, lowest degree first, no trailing zeros.
using UPoly = std::vector<Scalar>;

inline void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline UPoly to_upoly(const Poly& f) {
    UPoly a;
    for (const auto& t : f.terms()) {
        auto e = t.mono[1];
        if (a.size() <= e) a.resize(e + 1u, 0);
        a[e] = t.coef;
    }
    return a;
}

/// a mod b for monic b.
inline UPoly umod(UPoly a, const UPoly& b, const FieldSpec& F) {
    const std::size_t k = b.size() - 1;
    trim(a);
    while (a.size() > k) {
        Scalar c = a.back();
        std::size_t shift = a.size() - 1 - k;
        for (std::size_t i = 0; i <= k; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
        trim(a);
    }
    return a;
}

/// All monic polynomials of the given degree, in lexicographic coefficient order.
inline std::vector<UPoly> monic_polys(std::size_t deg, const FieldSpec& F) {
    std::vector<UPoly> out;
    UPoly cur(deg + 1, 0);
    cur[deg] = 1;
    const Scalar p = F.modulus();
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < deg && ++cur[i] == p) cur[i++] = 0;
        if (i == deg) break;
    }
    return out;
}

/// Exhaustive divisor check; fine for the tiny degrees used here.
inline bool irreducible(const UPoly& f, const FieldSpec& F) {
    const std::size_t k = f.size() - 1;
    for (std::size_t e = 1; 2 * e <= k; ++e)
        for (const auto& d : monic_polys(e, F))
            if (umod(f, d, F).empty()) return false;
    return true;
}

/// F_p-matrix of the map F(λ)^p -> F(λ)^q given by G mod λ, in the basis 1, D, ..., D^(k-1).
inline linalg::DenseMatrix reduce_mod(const PolyMatrix& g, const UPoly& lambda) {
    const auto& F = g.ring().field();
    const std::size_t k = lambda.size() - 1;
    linalg::DenseMatrix a(F, g.rows() * k, g.cols() * k);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            UPoly e = umod(to_upoly(g(i, j)), lambda, F);
            for (std::size_t t = 0; t < k; ++t) {  // column t: e * D^t mod λ
                UPoly shifted(t, 0);
                shifted.insert(shifted.end(), e.begin(), e.end());
                auto col = umod(shifted, lambda, F);
                for (std::size_t s = 0; s < col.size(); ++s) a(i * k + s, j * k + t) = col[s];
            }
        }
    return a;
}

}  // namespace detail

inline constexpr std::size_t kMaxProp3Degree = 4;
inline constexpr std::uint64_t kMaxProp3Candidates = std::uint64_t{1} << 20;

/**
 * Univariate check that 0 -> F(λ)^{p_l} -> ... -> F(λ)^{p_1} -> F(λ)^q is
 * exact for every monic irreducible λ of degree <= degree_bound, where F(λ) = F_p[D]/(λ).
 */
inline bool prop3_spot_check(const PolyComplex& g, std::size_t degree_bound) {
    if (g.ring().n() != 1 || g.ring().has_d0())
        throw DomainError("prop3_spot_check supports only n = 1, got n = " + std::to_string(g.ring().n()));
    if (degree_bound > kMaxProp3Degree)
        throw DomainError("prop3_spot_check: degree bound above " + std::to_string(kMaxProp3Degree));
    const auto& F = g.ring().field();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < degree_bound; ++i) count *= F.modulus();
    if (count > kMaxProp3Candidates) throw DomainError("prop3_spot_check: too many candidate polynomials");

    for (std::size_t deg = 1; deg <= degree_bound; ++deg)
        for (const auto& lambda : detail::monic_polys(deg, F)) {
            if (!detail::irreducible(lambda, F)) continue;
            std::vector<std::size_t> rank(g.length() + 2, 0);
            for (std::size_t k = 1; k <= g.length(); ++k) rank[k] = detail::reduce_mod(g.G(k), lambda).rank();
            for (std::size_t k = 1; k <= g.length(); ++k)
                if (g.G(k).cols() * deg - rank[k] != rank[k + 1]) return false;
        }
    return true;
}

}  // namespace mdcc

#endif

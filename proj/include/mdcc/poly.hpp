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

#ifndef MDCC_POLY_HPP
#define MDCC_POLY_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"

namespace mdcc {

/**
 * Degree of a polynomial or a column: an integer, or minus infinity for zero.
 */
class Degree {
   public:
    constexpr Degree(int v) noexcept : value_(v), finite_(true) {}  // NOLINT: implicit on purpose
    static constexpr Degree neg_inf() noexcept { return Degree(); }

    constexpr bool is_neg_inf() const noexcept { return !finite_; }
    int value() const {
        if (!finite_) throw DomainError("degree of the zero element is -infinity");
        return value_;
    }

    friend constexpr Degree operator+(Degree d, int shift) noexcept { return d.finite_ ? Degree(d.value_ + shift) : d; }

    friend constexpr bool operator==(Degree a, Degree b) noexcept {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

   private:
    constexpr Degree() noexcept : value_(0), finite_(false) {}
    int value_;
    bool finite_;
};

inline Degree max(Degree a, Degree b) noexcept { return a < b ? b : a; }

enum class RingKind : std::uint8_t {
    S,  ///< F_p[D1..Dn]
    T   ///< F_p[D0, D1..Dn], D0 homogenizing
};

class Ring {
   public:
    Ring(FieldSpec field, int n, RingKind kind = RingKind::S) : field_(field), n_(n), kind_(kind) {
        if (n < 1 || n > kMaxVariables)
            throw StructuralError("variable count must be in [1, " + std::to_string(kMaxVariables) + "], got " +
                                  std::to_string(n));
    }
    static Ring S(FieldSpec field, int n) { return Ring(field, n, RingKind::S); }
    static Ring T(FieldSpec field, int n) { return Ring(field, n, RingKind::T); }

    const FieldSpec& field() const noexcept { return field_; }
    int n() const noexcept { return n_; }
    RingKind kind() const noexcept { return kind_; }
    bool has_d0() const noexcept { return kind_ == RingKind::T; }

    Ring homogenized() const { return T(field_, n_); }
    Ring dehomogenized() const { return S(field_, n_); }

    bool admits(const Monomial& m) const noexcept {
        if (!has_d0() && m[0] != 0) return false;
        for (int i = n_ + 1; i < kSlots; ++i)
            if (m[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Ring&, const Ring&) = default;

   private:
    FieldSpec field_;
    int n_;
    RingKind kind_;
};

inline std::string describe(const Ring& r) {
    return std::string(r.has_d0() ? "T" : "S") + "(p=" + std::to_string(r.field().modulus()) +
           ", n=" + std::to_string(r.n()) + ")";
}

inline void require_same_ring(const Ring& a, const Ring& b, const char* where) {
    if (!(a == b)) throw StructuralError(std::string(where) + ": ring mismatch " + describe(a) + " vs " + describe(b));
}

struct Term {
    Monomial mono;
    Scalar coef;
    friend bool operator==(const Term&, const Term&) = default;
};

/**
 * Polynomial over S or T in canonical form: nonzero coefficients, distinct
 * monomials, terms strictly decreasing in grevlex. The zero polynomial has no terms.
 */
class Poly {
   public:
    explicit Poly(Ring ring) : ring_(ring) {}

    static Poly constant(Ring ring, std::int64_t c) {
        Poly f(ring);
        if (auto v = ring.field().reduce(c); v != 0) f.terms_.push_back({Monomial{}, v});
        return f;
    }
    static Poly monomial(Ring ring, const Monomial& m, Scalar c = 1) {
        if (!ring.admits(m)) throw StructuralError("monomial does not belong to " + describe(ring));
        Poly f(ring);
        if (c % ring.field().modulus() != 0) f.terms_.push_back({m, c % ring.field().modulus()});
        return f;
    }
    static Poly variable(Ring ring, int slot) { return monomial(ring, Monomial::variable(slot)); }

    /// Canonicalizes an arbitrary list of terms: sorts, merges duplicates, drops zeros.
    static Poly from_terms(Ring ring, std::vector<Term> terms) {
        Poly f(ring);
        for (auto& t : terms) {
            if (!ring.admits(t.mono)) throw StructuralError("monomial does not belong to " + describe(ring));
            t.coef %= ring.field().modulus();
        }
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return grevlex(a.mono, b.mono) > 0; });
        const auto& F = ring.field();
        for (auto& t : terms) {
            if (!f.terms_.empty() && f.terms_.back().mono == t.mono)
                f.terms_.back().coef = F.add(f.terms_.back().coef, t.coef);
            else
                f.terms_.push_back(t);
            if (f.terms_.back().coef == 0) f.terms_.pop_back();
        }
        return f;
    }

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    /// Nonzero element of F_p.
    bool is_unit() const noexcept { return terms_.size() == 1 && terms_[0].mono.is_one(); }
    const Term& leading_term() const {
        if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
        return terms_.front();
    }
    Scalar constant_coefficient() const noexcept {
        return !terms_.empty() && terms_.back().mono.is_one() ? terms_.back().coef : 0;
    }

    /// Total degree; -inf for zero.
    Degree degree() const noexcept {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return terms_.empty() ? Degree::neg_inf() : Degree(static_cast<int>(d));
    }

    bool is_homogeneous() const noexcept {
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.terms_) t.coef = ring_.field().neg(t.coef);
        return r;
    }

    friend Poly operator+(const Poly& f, const Poly& g) { return combine(f, g, false); }
    friend Poly operator-(const Poly& f, const Poly& g) { return combine(f, g, true); }

    friend Poly operator*(const Poly& f, const Poly& g) {
        require_same_ring(f.ring_, g.ring_, "poly mul");
        if (f.is_zero() || g.is_zero()) return Poly(f.ring_);
        const auto& F = f.ring_.field();
        std::vector<Term> prod;
        prod.reserve(f.size() * g.size());
        for (const auto& a : f.terms_)
            for (const auto& b : g.terms_) prod.push_back({a.mono * b.mono, F.mul(a.coef, b.coef)});
        return from_terms(f.ring_, std::move(prod));
    }

    Poly& operator+=(const Poly& g) { return *this = *this + g; }
    Poly& operator-=(const Poly& g) { return *this = *this - g; }
    Poly& operator*=(const Poly& g) { return *this = *this * g; }

    /// c * m * f. Order is preserved because grevlex is a monomial order.
    Poly scaled(Scalar c, const Monomial& m = Monomial{}) const {
        Poly r(ring_);
        c %= ring_.field().modulus();
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, ring_.field().mul(t.coef, c)});
        return r;
    }

    friend bool operator==(const Poly& f, const Poly& g) noexcept { return f.ring_ == g.ring_ && f.terms_ == g.terms_; }

    /// Direct construction from terms already in canonical order; used by the operations below.
    static Poly from_sorted(Ring ring, std::vector<Term> terms) {
        Poly f(ring);
        f.terms_ = std::move(terms);
        return f;
    }

   private:
    static Poly combine(const Poly& f, const Poly& g, bool subtract) {
        require_same_ring(f.ring_, g.ring_, subtract ? "poly sub" : "poly add");
        const auto& F = f.ring_.field();
        Poly r(f.ring_);
        r.terms_.reserve(f.size() + g.size());
        std::size_t i = 0, j = 0;
        while (i < f.size() || j < g.size()) {
            std::strong_ordering c = i == f.size()   ? std::strong_ordering::less
                                     : j == g.size() ? std::strong_ordering::greater
                                                     : grevlex(f.terms_[i].mono, g.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(f.terms_[i++]);
            } else if (c < 0) {
                const auto& t = g.terms_[j++];
                r.terms_.push_back({t.mono, subtract ? F.neg(t.coef) : t.coef});
            } else {
                auto v = subtract ? F.sub(f.terms_[i].coef, g.terms_[j].coef) : F.add(f.terms_[i].coef, g.terms_[j].coef);
                if (v != 0) r.terms_.push_back({f.terms_[i].mono, v});
                ++i;
                ++j;
            }
        }
        return r;
    }

    Ring ring_;
    std::vector<Term> terms_;
};

inline Degree total_degree(const Poly& f) noexcept { return f.degree(); }

/// D0^d f(D/D0): the degree-d homogenization, a bijection S_{<=d} -> T_d.
inline Poly homogenize_in_degree(const Poly& f, int d) {
    if (f.ring().has_d0()) throw StructuralError("homogenize_in_degree expects a polynomial over S");
    if (f.degree() > Degree(d))
        throw DomainError("cannot homogenize a polynomial of degree " + f.degree().to_string() + " in degree " +
                          std::to_string(d));
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (auto t : f.terms()) {
        t.mono.set(0, static_cast<unsigned>(d) - t.mono.degree());
        terms.push_back(t);
    }
    return Poly::from_terms(f.ring().homogenized(), std::move(terms));
}

/// Substitutes D0 := 1.
inline Poly dehomogenize(const Poly& f) {
    if (!f.ring().has_d0()) throw StructuralError("dehomogenize expects a polynomial over T");
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (auto t : f.terms()) {
        t.mono.set(0, 0);
        terms.push_back(t);
    }
    return Poly::from_terms(f.ring().dehomogenized(), std::move(terms));
}

/// Sum of the terms of total degree exactly d.
inline Poly homogeneous_part(const Poly& f, int d) {
    std::vector<Term> terms;
    for (const auto& t : f.terms())
        if (d >= 0 && t.mono.degree() == static_cast<unsigned>(d)) terms.push_back(t);
    return Poly::from_sorted(f.ring(), std::move(terms));
}

/// Drops every term divisible by D0; stays in T.
inline Poly set_D0_to_zero(const Poly& f) {
    if (!f.ring().has_d0()) throw StructuralError("set_D0_to_zero expects a polynomial over T");
    std::vector<Term> terms;
    for (const auto& t : f.terms())
        if (t.mono[0] == 0) terms.push_back(t);
    return Poly::from_sorted(f.ring(), std::move(terms));
}

/// A D0-free polynomial of T viewed in S (or an S polynomial unchanged).
inline Poly to_S(const Poly& f) {
    if (!f.ring().has_d0()) return f;
    for (const auto& t : f.terms())
        if (t.mono[0] != 0) throw DomainError("polynomial involves D0");
    return Poly::from_sorted(f.ring().dehomogenized(), f.terms());
}

/// An S polynomial viewed in T.
inline Poly to_T(const Poly& f) {
    if (f.ring().has_d0()) return f;
    return Poly::from_sorted(f.ring().homogenized(), f.terms());
}

}  // namespace mdcc

#endif

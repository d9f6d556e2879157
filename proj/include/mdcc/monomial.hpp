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

#ifndef MDCC_MONOMIAL_HPP
#define MDCC_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "errors.hpp"

namespace mdcc {

/// Slot 0 holds the exponent of the homogenizing variable D0, slot i the exponent of Di.
inline constexpr int kMaxVariables = 7;
inline constexpr int kSlots = kMaxVariables + 1;

/**
 * A power product D0^e0 D1^e1 ... Dn^en with its total degree cached.
 */
class Monomial {
   public:
    using Exponent = std::uint16_t;

    constexpr Monomial() noexcept = default;

    static Monomial variable(int slot, unsigned power = 1) {
        Monomial m;
        m.set(slot, power);
        return m;
    }

    Exponent operator[](int slot) const noexcept { return exps_[static_cast<std::size_t>(slot)]; }
    unsigned degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    void set(int slot, unsigned power) {
        if (slot < 0 || slot >= kSlots) throw StructuralError("variable slot out of range: " + std::to_string(slot));
        if (power > std::numeric_limits<Exponent>::max()) throw DomainError("exponent overflow");
        degree_ = degree_ - exps_[static_cast<std::size_t>(slot)] + power;
        exps_[static_cast<std::size_t>(slot)] = static_cast<Exponent>(power);
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kSlots; ++i) {
            unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
            if (e > std::numeric_limits<Exponent>::max()) throw DomainError("exponent overflow");
            r.exps_[i] = static_cast<Exponent>(e);
        }
        r.degree_ = a.degree_ + b.degree_;
        return r;
    }

    bool divides(const Monomial& other) const noexcept {
        if (degree_ > other.degree_) return false;
        for (std::size_t i = 0; i < kSlots; ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    /// other / *this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const noexcept {
        Monomial r;
        for (std::size_t i = 0; i < kSlots; ++i) r.exps_[i] = static_cast<Exponent>(other.exps_[i] - exps_[i]);
        r.degree_ = other.degree_ - degree_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
        Monomial r;
        for (std::size_t i = 0; i < kSlots; ++i) {
            r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
            r.degree_ += r.exps_[i];
        }
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

    /// Graded reverse lexicographic order with D1 > D2 > ... > Dn > D0.
    friend std::strong_ordering grevlex(const Monomial& a, const Monomial& b) noexcept {
        if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
        // the smallest variable decides first: D0, then Dn, ..., D1; a smaller exponent means a larger monomial
        if (a.exps_[0] != b.exps_[0]) return b.exps_[0] <=> a.exps_[0];
        for (std::size_t i = kSlots - 1; i >= 1; --i)
            if (a.exps_[i] != b.exps_[i]) return b.exps_[i] <=> a.exps_[i];
        return std::strong_ordering::equal;
    }

    std::size_t hash() const noexcept {
        std::size_t h = 0;
        for (auto e : exps_) h = h * 131 + e;
        return h;
    }

   private:
    std::array<Exponent, kSlots> exps_{};
    unsigned degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace mdcc

#endif

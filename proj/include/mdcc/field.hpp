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

#ifndef MDCC_FIELD_HPP
#define MDCC_FIELD_HPP

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace mdcc {

using Scalar = std::uint32_t;

inline bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/**
 * The prime field F_p. Scalars are plain integers kept canonical in [0, p).
 */
class FieldSpec {
   public:
    static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

    explicit FieldSpec(std::uint64_t p) : p_(static_cast<Scalar>(p)) {
        if (p >= kMaxModulus) throw DomainError("field modulus must be below 2^31, got " + std::to_string(p));
        if (!is_prime(p)) throw DomainError("p must be prime, got " + std::to_string(p));
    }

    Scalar modulus() const noexcept { return p_; }

    Scalar reduce(std::int64_t v) const noexcept {
        auto r = v % static_cast<std::int64_t>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }
    Scalar add(Scalar a, Scalar b) const noexcept {
        auto s = std::uint64_t{a} + b;
        return static_cast<Scalar>(s >= p_ ? s - p_ : s);
    }
    Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : static_cast<Scalar>(std::uint64_t{a} + p_ - b); }
    Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const noexcept { return static_cast<Scalar>(std::uint64_t{a} * b % p_); }

    Scalar inv(Scalar a) const {
        if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(p_));
        // extended Euclid on (a, p)
        std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            auto q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        return reduce(t);
    }

    /// Symmetric representative in (-p/2, p/2], used for display.
    std::int64_t signed_value(Scalar a) const noexcept {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

   private:
    Scalar p_;
};

}  // namespace mdcc

#endif

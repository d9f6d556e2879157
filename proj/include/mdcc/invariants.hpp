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

#ifndef MDCC_INVARIANTS_HPP
#define MDCC_INVARIANTS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "complexes.hpp"

namespace mdcc {

using BigInt = boost::multiprecision::cpp_int;

/// C(d + n, n), the dimension of S_{<=d}; zero for d <= -1.
inline BigInt binomial_shifted(long long d, int n) {
    if (d < 0) return 0;
    BigInt r = 1;
    for (int k = 1; k <= n; ++k) r = r * (d + k) / k;  // exact at every step
    return r;
}

/// HF(C, d) = sum_i (-1)^(i-1) sum_j C(d - a_i(j) + n, n), from the degree table of a PD resolution.
inline BigInt hilbert_formula(const DegreeTable& table, int n, long long d) {
    BigInt total = 0;
    for (std::size_t i = 0; i < table.length(); ++i) {
        BigInt level = 0;
        for (int a : table[i].values()) level += binomial_shifted(d - a, n);
        if (i % 2 == 0)
            total += level;
        else
            total -= level;
    }
    if (total < 0) throw std::logic_error("hilbert_formula: negative value, table is not from a PD resolution");
    return total;
}

/// Degree table with every level sorted ascending; level 0 holds a_1.
struct ForneyTable {
    std::vector<TwistFunction> levels;
    friend bool operator==(const ForneyTable&, const ForneyTable&) = default;
};

inline ForneyTable forney_table(const DegreeTable& table) {
    ForneyTable f;
    for (const auto& level : table.levels) f.levels.push_back(level.sorted());
    return f;
}

inline ForneyTable forney_table(const ResolutionReport& report) { return forney_table(report.degree_table); }

/// Largest entry of a_1.
inline int memory(const ResolutionReport& report) { return report.degree_table[0].max(); }

/// The rate (p_l, ..., p_1) / q, kept as a tuple.
struct Rate {
    std::vector<std::size_t> numerators;  // p_l first
    std::size_t q = 0;
    friend bool operator==(const Rate&, const Rate&) = default;
};

struct CodeInvariants {
    Rate rate;
    int memory = 0;
    std::size_t homological_dimension = 0;
    std::map<int, BigInt> hilbert_values;
};

inline CodeInvariants rate_and_dimension(const ResolutionReport& report) {
    const auto& g = report.complex;
    CodeInvariants inv;
    inv.homological_dimension = g.length();
    if (inv.homological_dimension < 1 || inv.homological_dimension > static_cast<std::size_t>(g.ring().n()))
        throw std::logic_error("homological dimension " + std::to_string(inv.homological_dimension) +
                               " violates 1 <= l <= n = " + std::to_string(g.ring().n()));
    auto sizes = g.sizes();
    inv.rate.q = sizes.front();
    inv.rate.numerators.assign(sizes.rbegin(), sizes.rend() - 1);
    inv.memory = memory(report);
    return inv;
}

/// All invariants, with Hilbert values for 0 <= d <= hilbert_max (none if hilbert_max < 0).
inline CodeInvariants code_invariants(const ResolutionReport& report, int hilbert_max = -1) {
    auto inv = rate_and_dimension(report);
    for (int d = 0; d <= hilbert_max; ++d)
        inv.hilbert_values[d] = hilbert_formula(report.degree_table, report.complex.ring().n(), d);
    return inv;
}

}  // namespace mdcc

#endif

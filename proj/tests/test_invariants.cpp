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

#include <gtest/gtest.h>

#include "support/random.hpp"

namespace mdcc {
namespace {

using testing::M;

const FieldSpec F2(2), F101(101);

DegreeTable table(std::vector<std::vector<int>> levels) {
    DegreeTable t;
    for (auto& l : levels) t.levels.emplace_back(std::move(l));
    return t;
}

TEST(Binomial, Values) {
    EXPECT_EQ(binomial_shifted(2, 2), 6);
    EXPECT_EQ(binomial_shifted(0, 3), 1);
    EXPECT_EQ(binomial_shifted(-1, 3), 0);
    EXPECT_EQ(binomial_shifted(-5, 1), 0);
    EXPECT_EQ(binomial_shifted(100, 7), BigInt("26075972546"));
}

TEST(HilbertFormula, Koszul) {
    auto t = table({{1, 1}, {2}});
    EXPECT_EQ(hilbert_formula(t, 2, 2), 5);
    EXPECT_EQ(hilbert_formula(t, 2, 0), 0);
    std::vector<BigInt> expect{0, 2, 5, 9, 14};
    for (int d = 0; d <= 4; ++d) EXPECT_EQ(hilbert_formula(t, 2, d), expect[d]);
}

TEST(HilbertFormula, FullSpace) {
    for (int q = 1; q <= 3; ++q)
        for (int d = 0; d <= 5; ++d)
            EXPECT_EQ(hilbert_formula(table({std::vector<int>(q, 0)}), 3, d), q * binomial_shifted(d, 3));
}

TEST(HilbertFormula, LargeDegreesStayExact) {
    // far beyond 64-bit range
    auto t = table({{0}});
    EXPECT_EQ(hilbert_formula(t, 7, 1000000), binomial_shifted(1000000, 7));
    EXPECT_GT(binomial_shifted(1000000, 7), BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST(ForneyTable, Examples) {
    auto k = minimal_resolution(CodePresentation(M(Ring::S(F2, 2), {{"D1", "D2"}})));
    EXPECT_EQ(forney_table(k), (ForneyTable{{TwistFunction({1, 1}), TwistFunction({2})}}));
    auto f = minimal_resolution(CodePresentation(M(Ring::S(F2, 2), {{"D1"}, {"D2"}})));
    EXPECT_EQ(forney_table(f), (ForneyTable{{TwistFunction({1})}}));
    auto s = minimal_resolution(CodePresentation(PolyMatrix::identity(Ring::S(F2, 2), 2)));
    EXPECT_EQ(forney_table(s), (ForneyTable{{TwistFunction({0, 0})}}));
    EXPECT_EQ(forney_table(table({{4, 2}, {3, 1, 2}})).levels[1].values(), (std::vector<int>{1, 2, 3}));
}

TEST(Memory, Examples) {
    EXPECT_EQ(memory(minimal_resolution(CodePresentation(M(Ring::S(F2, 2), {{"D1", "D2"}})))), 1);
    auto worked = M(Ring::S(F101, 1),
                   {{"2*D1^3 + D1 + 1", "D1^2 - 10"}, {"D1^2 - 5", "D1 + 4"}, {"3*D1^4 + 7*D1", "D1^2 + 1"}});
    EXPECT_EQ(memory(minimal_resolution(CodePresentation(worked))), 4);
    EXPECT_EQ(memory(minimal_resolution(CodePresentation(PolyMatrix::identity(Ring::S(F2, 1), 2)))), 0);
}

TEST(Rate, Examples) {
    auto k = rate_and_dimension(minimal_resolution(CodePresentation(M(Ring::S(F2, 2), {{"D1", "D2"}}))));
    EXPECT_EQ(k.rate, (Rate{{1, 2}, 1}));
    EXPECT_EQ(k.homological_dimension, 2u);
    auto f = rate_and_dimension(minimal_resolution(CodePresentation(M(Ring::S(F2, 2), {{"D1"}, {"D2"}}))));
    EXPECT_EQ(f.rate, (Rate{{1}, 2}));
    EXPECT_EQ(f.homological_dimension, 1u);
    auto s = rate_and_dimension(minimal_resolution(CodePresentation(PolyMatrix::identity(Ring::S(F2, 3), 3))));
    EXPECT_EQ(s.rate, (Rate{{3}, 3}));
    EXPECT_EQ(s.homological_dimension, 1u);
}

TEST(CodeInvariants, HilbertValuesMatchOracle) {
    testing::Rng rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        auto c = testing::random_code(rng);
        auto inv = code_invariants(minimal_resolution(c), 5);
        auto oracle = oracle::hilbert_oracle_range(c, 5);
        for (int d = 0; d <= 5; ++d) EXPECT_EQ(inv.hilbert_values.at(d), BigInt(oracle[d])) << trial << " " << d;
        EXPECT_GE(inv.homological_dimension, 1u);
        EXPECT_LE(inv.homological_dimension, static_cast<std::size_t>(c.ring().n()));
    }
}

}  // namespace
}  // namespace mdcc

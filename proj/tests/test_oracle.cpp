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

const FieldSpec F2(2), F3(3);

CodePresentation koszul_code() { return CodePresentation(M(Ring::S(F2, 2), {{"D1", "D2"}})); }

TEST(TruncatedCodeSpace, Examples) {
    auto c = koszul_code();
    EXPECT_EQ(oracle::truncated_code_space(c, 1).dimension(), 2u);
    EXPECT_EQ(oracle::truncated_code_space(c, 0).dimension(), 0u);
    auto basis = oracle::truncated_code_space(c, 1).basis(c.ring());
    ASSERT_EQ(basis.size(), 2u);
    for (const auto& b : basis) EXPECT_EQ(column_degree(b), Degree(1));
    for (int n = 1; n <= 3; ++n) {
        CodePresentation full(PolyMatrix::identity(Ring::S(F3, n), 1));
        for (int d = 0; d <= 4; ++d)
            EXPECT_EQ(BigInt(oracle::truncated_code_space(full, d).dimension()), binomial_shifted(d, n));
    }
}

TEST(TruncatedCodeSpace, StabilizesWhenDegreesCancel) {
    // D1 (D2 + 1) - D2 (D1 + 1) = D1 - D2 has lower degree than its representation
    CodePresentation c(M(Ring::S(F3, 2), {{"D1*D2 + D1", "D1*D2 + D2"}}));
    auto s = oracle::truncated_code_space(c, 1);
    EXPECT_TRUE(s.stabilized);
    EXPECT_EQ(s.dimension(), 1u);
    EXPECT_GT(s.cap_used, 1);
}

TEST(HilbertOracle, Koszul) {
    auto c = koszul_code();
    EXPECT_EQ(oracle::hilbert_oracle(c, 2), 5u);
    EXPECT_EQ(oracle::hilbert_oracle(c, 3), 9u);
    EXPECT_EQ(oracle::hilbert_oracle(c, 4), 14u);
    EXPECT_EQ(oracle::hilbert_oracle_range(c, 4), (std::vector<std::size_t>{0, 2, 5, 9, 14}));
}

TEST(TruncatedExactness, Examples) {
    Ring S = Ring::S(F2, 2);
    auto k = validate_complex({M(S, {{"D1", "D2"}}), M(S, {{"D2"}, {"D1"}})});
    for (int d = 0; d <= 3; ++d) EXPECT_TRUE(oracle::truncated_exactness(k, d));
    auto bad = validate_complex({M(Ring::S(F2, 1), {{"D1 + 1", "D1"}, {"D1", "D1"}})});
    EXPECT_FALSE(oracle::truncated_exactness(bad, 1));
    auto id = validate_complex({PolyMatrix::identity(S, 2)});
    for (int d = 0; d <= 3; ++d) EXPECT_TRUE(oracle::truncated_exactness(id, d));
    auto koszul_alone = validate_complex({M(S, {{"D1", "D2"}})});
    EXPECT_FALSE(oracle::truncated_exactness(koszul_alone, 2));
}

TEST(TruncatedKernel, Koszul) {
    Ring S = Ring::S(F2, 2);
    auto g = M(S, {{"D1", "D2"}});
    EXPECT_EQ(oracle::truncated_kernel(g, 0).size(), 0u);
    EXPECT_EQ(oracle::truncated_kernel(g, 1).size(), 1u);
    EXPECT_EQ(oracle::truncated_kernel(g, 2).size(), 3u);
    for (const auto& y : oracle::truncated_kernel(g, 2))
        EXPECT_TRUE((g * PolyMatrix::from_columns(S, 2, {y})).is_zero());
}

TEST(MemoryRecovery, Examples) {
    auto k = koszul_code();
    EXPECT_TRUE(oracle::memory_recovery_check(k, 1, 4));
    EXPECT_FALSE(oracle::memory_recovery_check(k, 0, 4));
    CodePresentation f(M(Ring::S(F2, 2), {{"D1"}, {"D2"}}));
    EXPECT_TRUE(oracle::memory_recovery_check(f, 1, 4));
    EXPECT_FALSE(oracle::memory_recovery_check(f, 0, 4));
}

TEST(GradedGeneratorCounts, Koszul) {
    Ring T = Ring::T(F2, 2);
    auto counts = oracle::graded_minimal_generator_counts(M(T, {{"D1", "D2", "D1 + D2", "D0*D1"}}),
                                                          TwistFunction::zero(1), 3);
    EXPECT_EQ(counts, (std::vector<std::size_t>{0, 2, 0, 0}));
}

TEST(DenseLinalg, RankNullity) {
    testing::Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        FieldSpec F(trial % 2 ? 2 : 101);
        std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 6;
        linalg::DenseMatrix a(F, r, c);
        std::uniform_int_distribution<Scalar> d(0, F.modulus() - 1);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = trial % 3 == 0 && j == 0 ? 0 : d(rng);
        auto ns = a.nullspace();
        EXPECT_EQ(a.rank() + ns.size(), c);
        for (const auto& v : ns)
            for (std::size_t i = 0; i < r; ++i) {
                Scalar s = 0;
                for (std::size_t j = 0; j < c; ++j) s = F.add(s, F.mul(a(i, j), v[j]));
                EXPECT_EQ(s, 0u);
            }
    }
}

}  // namespace
}  // namespace mdcc

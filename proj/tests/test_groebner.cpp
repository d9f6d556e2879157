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
using testing::P;
using testing::V;

const FieldSpec F2(2), F101(101);

SubmodulePresentation ideal(const Ring& S, std::initializer_list<const char*> gens) {
    std::vector<ModElem> cols;
    for (const auto* g : gens) cols.push_back(V(S, {g}));
    return SubmodulePresentation(PolyMatrix::from_columns(S, 1, cols));
}

std::vector<ModElem> single(const Ring& S, std::initializer_list<const char*> gens) {
    std::vector<ModElem> out;
    for (const auto* g : gens) out.push_back(V(S, {g}));
    return out;
}

// membership by the truncated linear algebra oracle alone
bool oracle_member(const ModElem& f, const CodePresentation& c) {
    if (f.is_zero()) return true;
    auto space = oracle::truncated_code_space(c, column_degree(f).value());
    oracle::Echelon e(c.ring().field());
    for (const auto& r : space.rows) e.insert(r);
    return e.reduce(oracle::to_row(f, TwistFunction::zero(f.rank()))).empty();
}

struct Lead {
    Monomial mono;
    std::size_t pos;
    Scalar coef;
};

Lead leading(const ModElem& f, const ModuleOrder& ord) {
    std::optional<Lead> best;
    for (std::size_t i = 0; i < f.rank(); ++i)
        for (const auto& t : f[i].terms())
            if (!best || ord.compare(t.mono, i, best->mono, best->pos) > 0) best = Lead{t.mono, i, t.coef};
    return *best;
}

TEST(NormalForm, Examples) {
    Ring S = Ring::S(F101, 2);
    auto gb = groebner_basis(ideal(S, {"D1"}));
    EXPECT_EQ(normal_form(V(S, {"D1^2 + D2"}), gb), V(S, {"D2"}));
    auto gb2 = groebner_basis(ideal(S, {"D1^2 + D2", "D2^3"}));
    EXPECT_TRUE(normal_form(V(S, {"D1^2 + D2"}), gb2).is_zero());
    auto gb3 = groebner_basis(ideal(S, {"D1", "D2"}));
    EXPECT_EQ(normal_form(V(S, {"1"}), gb3), V(S, {"1"}));
    EXPECT_THROW(normal_form(V(Ring::S(F101, 3), {"1"}), gb3), StructuralError);
}

TEST(GroebnerBasis, Examples) {
    Ring S = Ring::S(F101, 2);
    EXPECT_EQ(groebner_basis(ideal(S, {"D1", "D2"})).generators(), single(S, {"D1", "D2"}));
    EXPECT_EQ(groebner_basis(ideal(S, {"D1", "D1"})).generators(), single(S, {"D1"}));
    EXPECT_EQ(groebner_basis(ideal(S, {"D1 + D2", "D2"})).generators(), single(S, {"D1", "D2"}));
    EXPECT_EQ(groebner_basis(ideal(S, {"3*D1 + 1", "D1"})).generators(), single(S, {"1"}));
}

TEST(GroebnerBasis, RejectsEmptyAndZeroColumns) {
    Ring S = Ring::S(F101, 2);
    EXPECT_THROW(SubmodulePresentation(PolyMatrix(S, 1, 0)), DomainError);
    EXPECT_THROW(SubmodulePresentation(M(S, {{"D1", "0"}})), DomainError);
    EXPECT_THROW(SubmodulePresentation(PolyMatrix(S, 0, 1)), StructuralError);
}

TEST(Membership, Examples) {
    Ring S = Ring::S(F101, 2);
    auto I = ideal(S, {"D1", "D2"});
    EXPECT_TRUE(membership(V(S, {"D1*D2"}), I));
    EXPECT_FALSE(membership(V(S, {"1"}), I));
    EXPECT_FALSE(oracle_member(V(S, {"1"}), CodePresentation(I.generators())));
    EXPECT_TRUE(membership(V(S, {"0"}), I));
}

TEST(ModuleEqual, Examples) {
    Ring S = Ring::S(F101, 2);
    EXPECT_TRUE(module_equal(ideal(S, {"D1", "D2"}), ideal(S, {"D2", "D1 + D2"})));
    EXPECT_FALSE(module_equal(ideal(S, {"D1"}), ideal(S, {"D1", "D2"})));
    auto m = SubmodulePresentation(M(S, {{"D1", "D2^2"}, {"1", "D1"}}));
    EXPECT_TRUE(module_equal(m, m));
}

TEST(Syzygy, Examples) {
    Ring S = Ring::S(F101, 2);
    auto k = syzygy_basis(M(S, {{"D1", "D2"}}));
    ASSERT_EQ(k.cols(), 1u);
    EXPECT_TRUE(module_equal(SubmodulePresentation(k), SubmodulePresentation(M(S, {{"D2"}, {"-D1"}}))));
    EXPECT_EQ(syzygy_basis(M(S, {{"D1"}, {"D2"}})).cols(), 0u);
    auto e = syzygy_basis(M(S, {{"D1", "D1"}}));
    EXPECT_TRUE(module_equal(SubmodulePresentation(e), SubmodulePresentation(M(S, {{"1"}, {"-1"}}))));
}

TEST(LeftKernel, Examples) {
    Ring S = Ring::S(F101, 2);
    auto h = left_kernel(M(S, {{"D1"}, {"D2"}}));
    ASSERT_EQ(h.rows(), 1u);
    EXPECT_TRUE(module_equal(SubmodulePresentation(h.transpose()), SubmodulePresentation(M(S, {{"D2"}, {"-D1"}}))));
    EXPECT_EQ(left_kernel(M(S, {{"D1", "D2"}})).rows(), 0u);
    EXPECT_EQ(left_kernel(PolyMatrix::identity(S, 3)).rows(), 0u);
}

TEST(MinimalGenerators, Examples) {
    Ring S = Ring::S(F101, 2);
    auto zero1 = TwistFunction::zero(1);
    auto m = minimal_generators(M(S, {{"D1", "D2", "D1 + D2"}}), zero1);
    EXPECT_EQ(m.cols(), 2u);
    EXPECT_TRUE(module_equal(SubmodulePresentation(m), ideal(S, {"D1", "D2"})));
    EXPECT_EQ(minimal_generators(M(S, {{"D1"}}), zero1).columns(), single(S, {"D1"}));
    EXPECT_EQ(minimal_generators(M(S, {{"D1", "D1*D2"}}), zero1).columns(), single(S, {"D1"}));
    EXPECT_THROW(minimal_generators(M(S, {{"D1 + 1"}}), zero1), DomainError);
}

// --- properties on random inputs ---

class RandomModules : public ::testing::TestWithParam<int> {};

TEST_P(RandomModules, BasisIsReducedAndSPairsVanish) {
    testing::Rng rng(GetParam());
    auto c = testing::random_code(rng, {{2, 3, 101}, 3, 3, 3, 2});
    auto gens = c.nonzero_generators();
    if (gens.cols() == 0) GTEST_SKIP();
    SubmodulePresentation sub(gens);
    auto gb = groebner_basis(sub);
    const auto& ord = gb.order();
    const auto& F = c.ring().field();
    auto basis = gb.generators();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto li = leading(basis[i], ord);
        EXPECT_EQ(li.coef, 1u);
        EXPECT_TRUE(membership(basis[i], sub));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto lj = leading(basis[j], ord);
            if (i != j && li.pos == lj.pos) {
                EXPECT_FALSE(li.mono.divides(lj.mono));
            }
            if (j <= i || li.pos != lj.pos) continue;
            auto l = lcm(li.mono, lj.mono);
            auto si = Poly::monomial(c.ring(), li.mono.quotient_of(l)) * basis[i];
            auto sj = Poly::monomial(c.ring(), lj.mono.quotient_of(l), F.neg(1)) * basis[j];
            EXPECT_TRUE(normal_form(si + sj, gb).is_zero());
        }
    }
    for (const auto& g : gens.columns()) EXPECT_TRUE(normal_form(g, gb).is_zero());
}

TEST_P(RandomModules, BasisIsCanonicalUnderRepresentation) {
    testing::Rng rng(1000 + GetParam());
    auto c = testing::random_code(rng, {{2, 3, 101}, 3, 3, 3, 2});
    auto other = testing::re_present(c, rng);
    auto a = groebner_basis(SubmodulePresentation(c.nonzero_generators()));
    auto b = groebner_basis(SubmodulePresentation(other.nonzero_generators()));
    EXPECT_TRUE(a == b);
    EXPECT_TRUE(module_equal(SubmodulePresentation(c.nonzero_generators()),
                             SubmodulePresentation(other.nonzero_generators())));
}

TEST_P(RandomModules, MembershipAgreesWithOracle) {
    testing::Rng rng(2000 + GetParam());
    auto c = testing::random_code(rng, {{2, 3, 101}, 2, 2, 2, 2});
    auto gb = groebner_basis(SubmodulePresentation(c.nonzero_generators()));
    auto gens = c.generators().columns();
    for (int trial = 0; trial < 4; ++trial) {
        ModElem f(c.ring(), c.q());
        if (trial % 2 == 0) {
            for (const auto& g : gens) f = f + testing::random_poly(c.ring(), 1, rng) * g;
        } else {
            for (std::size_t i = 0; i < c.q(); ++i) f[i] = testing::random_poly(c.ring(), 2, rng);
        }
        EXPECT_EQ(membership(f, gb), oracle_member(f, c));
    }
}

TEST_P(RandomModules, SyzygiesAreSoundAndComplete) {
    testing::Rng rng(3000 + GetParam());
    auto c = testing::random_code(rng, {{2, 3, 101}, 2, 2, 3, 2});
    auto G = c.generators();
    auto k = syzygy_basis(G);
    EXPECT_TRUE((G * k).is_zero());
    for (int d = 0; d <= 3; ++d)
        for (const auto& y : oracle::truncated_kernel(G, d)) {
            if (k.cols() == 0) {
                ADD_FAILURE() << "kernel element missed at degree " << d;
                break;
            }
            EXPECT_TRUE(membership(y, SubmodulePresentation(k)));
        }
}

TEST_P(RandomModules, LeftKernelAnnihilates) {
    testing::Rng rng(4000 + GetParam());
    auto c = testing::random_code(rng, {{3, 101}, 2, 3, 2, 2});
    auto h = left_kernel(c.generators());
    EXPECT_TRUE(h.rows() == 0 || (h * c.generators()).is_zero());
}

TEST_P(RandomModules, MinimalGeneratorCountsAgreeWithSlices) {
    testing::Rng rng(5000 + GetParam());
    FieldSpec F(GetParam() % 2 ? 2 : 101);
    Ring T = Ring::T(F, 1 + GetParam() % 2);
    Ring S = T.dehomogenized();
    std::size_t q = 1 + GetParam() % 2;
    auto twist = TwistFunction::zero(q);
    std::vector<ModElem> cols;
    for (int j = 0; j < 4; ++j) {
        int d = std::uniform_int_distribution<int>(0, 2)(rng);
        ModElem col(T, q);
        for (std::size_t i = 0; i < q; ++i) col[i] = homogenize_in_degree(testing::random_poly(S, d, rng), d);
        if (!col.is_zero()) cols.push_back(col);
        if (j == 3 && !cols.empty()) {
            cols.push_back(Poly::variable(T, 0) * cols.front());
            cols.push_back(Poly::variable(T, 1) * cols.back());
        }
    }
    if (cols.empty()) GTEST_SKIP();
    auto gens = PolyMatrix::from_columns(T, q, cols);
    auto mins = minimal_generators(gens, twist);
    auto expected = oracle::graded_minimal_generator_counts(gens, twist, 4);
    std::vector<std::size_t> got(expected.size(), 0);
    for (const auto& g : mins.columns()) ++got.at(static_cast<std::size_t>(homogeneous_degree(g, twist)));
    EXPECT_EQ(got, expected);
    EXPECT_TRUE(module_equal(SubmodulePresentation(mins), SubmodulePresentation(gens)));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomModules, ::testing::Range(1, 31));

}  // namespace
}  // namespace mdcc

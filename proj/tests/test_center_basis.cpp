#include "fixtures.hpp"
#include "hecke/center_basis.hpp"

#include <gtest/gtest.h>

using namespace hecke;

namespace {
MatrixStore& store() {
    static MatrixStore s;
    return s;
}
}  // namespace

TEST(CenterBasis, BasisShapes) {
    EXPECT_EQ(basis_shapes(3), (std::vector<Composition>{{}, {1}, {2}}));
    EXPECT_EQ(basis_shapes(4), (std::vector<Composition>{{}, {1}, {2}, {1, 1}, {3}}));
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(basis_shapes(n).size(), enumerate_partitions(n).size());
}

TEST(CenterBasis, GammaOrder) {
    EXPECT_EQ(gamma_order(3), (std::vector<Composition>{{1, 1, 1}, {2, 1}, {3}}));
    for (int n = 1; n <= 6; ++n) {
        auto order = gamma_order(n);
        auto shapes = basis_shapes(n);
        ASSERT_EQ(order.size(), shapes.size());
        for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(minus_one(order[i]), shapes[i]);
    }
}

TEST(CenterBasis, ScriptMExamples) {
    auto m2 = script_m(Composition{2}, 3, store());
    EXPECT_EQ(m2.monomial_coeffs, (Expansion{{{2}, 1}, {{1, 1}, Poly({0, 0, -1})}}));
    auto m11 = script_m(Composition{1, 1}, 4, store());
    EXPECT_EQ(m11.monomial_coeffs, (Expansion{{{2}, -1}, {{1, 1}, Poly({1, 0, 1})}}));
    EXPECT_THROW(script_m(Composition{1, 1}, 3, store()), std::invalid_argument);
    EXPECT_THROW(script_m(Composition{1, 2}, 5, store()), std::invalid_argument);
}

TEST(CenterBasis, PublishedBases) {
    for (int n = 3; n <= 5; ++n) {
        auto b = basis(n, store());
        auto expected = fixtures::basis_example(n);
        ASSERT_EQ(b.size(), expected.size()) << n;
        for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b[i].monomial_coeffs, expected[i]) << "n=" << n << " i=" << i;
    }
}

TEST(CenterBasis, ElementsAreCentralAndUnitriangular) {
    for (int n = 1; n <= 6; ++n) {
        auto b = basis(n, store());
        auto order = gamma_order(n);
        for (std::size_t i = 0; i < b.size(); ++i) {
            EXPECT_TRUE(is_central(b[i].value)) << n << " " << b[i].label;
            // M_λ = Γ_bar(λ) + Γ's of strictly smaller minimal shape
            const auto& g = b[i].gamma_coeffs;
            EXPECT_EQ(g[i].second, Poly(1));
            for (std::size_t j = i + 1; j < g.size(); ++j)
                if (minus_one(order[j]).size() >= b[i].label.size()) EXPECT_TRUE(g[j].second.is_zero());
        }
    }
}

TEST(CenterBasis, ExpandInGamma) {
    auto e = expand_in_gamma(eval_m(Composition{2}, 3));
    EXPECT_EQ(e, (Expansion{{{1, 1, 1}, 3}, {{2, 1}, Poly({0, 2})}, {{3}, Poly({1, 0, 1})}}));
    auto empty = script_m(Composition{}, 3, store());
    EXPECT_EQ(expand_in_gamma(empty), (Expansion{{{1, 1, 1}, 1}, {{2, 1}, 0}, {{3}, 0}}));
}

TEST(CenterBasis, GammaBasisCharacterization) {
    for (int n = 1; n <= 5; ++n) {
        auto g = gamma_basis(n, store());
        auto order = gamma_order(n);
        ASSERT_EQ(g.size(), order.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            EXPECT_TRUE(verify_gamma(g[i], order[i])) << order[i];
            EXPECT_TRUE(is_central(g[i].value));
        }
    }
}

TEST(CenterBasis, GammaThreeInH3) {
    auto g = gamma_basis(3, store());
    const auto& g3 = g[2].value;
    auto w = [](std::vector<int> v) { return Permutation::from_word(v, 3); };
    EXPECT_EQ(g3.coeff(w({1, 2})), Poly(1));
    EXPECT_EQ(g3.coeff(w({2, 1})), Poly(1));
    EXPECT_TRUE(g3.coeff(w({1})).is_zero());
    EXPECT_EQ(specialize(g3), class_sum(Composition{3}));
    EXPECT_FALSE(verify_gamma(g3, Composition{2, 1}));
    EXPECT_TRUE(verify_gamma(g[1], Composition{2, 1}));
}

TEST(CenterBasis, Counterexample) {
    auto c = counterexample_matrix();
    std::vector<Composition> l = {{}, {1}, {2}};
    EXPECT_TRUE(c.same_entries(LabeledMatrix(l, l, {{1, 0, 3}, {0, 1, Poly({0, 2})}, {0, 0, Poly({1, 0, 1})}})));
    EXPECT_EQ(determinant(c), Poly({1, 0, 1}));
    EXPECT_FALSE(determinant(c).is_unit());
}

TEST(CenterBasis, MonomialSets) {
    EXPECT_TRUE(check_monomial_set({{}, {1}, {1, 1}}, 3));
    EXPECT_FALSE(check_monomial_set({{}, {1}, {2}}, 3));
    EXPECT_TRUE(check_monomial_set({{}, {1}, {1, 1}, {1, 1, 1}, {2, 2, 2}}, 4));
    EXPECT_THROW(check_monomial_set({{}, {1}}, 3), std::invalid_argument);
}

TEST(CenterBasis, TowerRouteGivesRankSix) {
    MatrixStore tower(MatrixRoute::kTower);
    auto direct = basis(5, store());
    auto via_tower = basis(5, tower);
    for (std::size_t i = 0; i < direct.size(); ++i) EXPECT_EQ(direct[i].monomial_coeffs, via_tower[i].monomial_coeffs);
    auto b6 = basis(6, store());
    EXPECT_EQ(b6.size(), 11u);
    EXPECT_EQ(b6.back().label, (Composition{5}));
}

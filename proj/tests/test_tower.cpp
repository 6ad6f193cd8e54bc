#include "fixtures.hpp"
#include "hecke/tower.hpp"

#include <gtest/gtest.h>

using namespace hecke;

TEST(Tower, ZMatrix) {
    EXPECT_TRUE(z_matrix(1).is_identity());
    auto z2 = z_matrix(2);
    ASSERT_EQ(z2.nrows(), 2u);
    EXPECT_EQ(z2.at(0, 0), Poly(1));
    EXPECT_EQ(z2.at(0, 1), Poly(1));
    EXPECT_TRUE(z2.at(1, 0).is_zero());
    EXPECT_EQ(z2.at(1, 1), Poly(1));
    auto z3 = z_matrix(3);
    ASSERT_EQ(z3.nrows(), 4u);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(z3.at(i, j), z2.at(i, j));
}

TEST(Tower, XiAndKUpsilonKAreInverse) {
    EXPECT_TRUE(xi_matrix(1).is_identity());
    for (int k = 1; k <= 5; ++k) EXPECT_TRUE((xi_matrix(k) * (k_matrix(k) * upsilon_matrix(k) * k_matrix(k))).is_identity()) << k;
}

TEST(Tower, XiMatchesDirectQuasiSymmetricCoefficients) {
    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(x_matrix(k).same_entries(x_matrix_direct(k, 2 * k))) << k;
}

TEST(Tower, PrintedMatrices) {
    EXPECT_TRUE(m_matrix_tower(2).same_entries(fixtures::m2()));
    EXPECT_TRUE(n_matrix_tower(2).same_entries(fixtures::n2()));
    EXPECT_TRUE(m_matrix_tower(3).same_entries(fixtures::m3()));
    EXPECT_TRUE(n_matrix_tower(3).same_entries(fixtures::n3()));
    auto m3 = m_matrix_tower(3);
    EXPECT_EQ(m3(Composition{3}, Composition{3}), Poly({1, 0, 5, 0, 5, 0, 1}));
    EXPECT_EQ(m3(Composition{3}, Composition{1, 1, 1}), Poly(1));
}

TEST(Tower, DirectRoute) {
    auto m1 = m_matrix_direct(1);
    EXPECT_EQ(m1(Composition{1}, Composition{1}), Poly(1));
    EXPECT_TRUE(m_matrix_direct(2).same_entries(fixtures::m2()));
    EXPECT_TRUE(m_matrix_direct(3).same_entries(fixtures::m3()));
    EXPECT_TRUE(m_matrix_direct(3, 0, 4).same_entries(fixtures::m3()));
    EXPECT_THROW(m_matrix_direct(5), ResourceLimit);
}

TEST(Tower, MatchesDirectRouteUpToFour) {
    for (int k = 2; k <= 4; ++k) EXPECT_TRUE(m_matrix_tower(k).same_entries(m_matrix_direct(k))) << k;
}

TEST(Tower, MIsIndependentOfRank) {
    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(m_matrix_direct(k, 2 * k).same_entries(m_matrix_direct(k, 2 * k + 1))) << k;
}

TEST(Tower, TowerMatricesAreUnimodularBeyondDirectRange) {
    auto m5 = m_matrix_tower(5);
    EXPECT_TRUE(determinant(m5).is_unit());
    EXPECT_TRUE((m5 * n_matrix_tower(5)).is_identity());
}

TEST(Tower, HatConventions) {
    EXPECT_EQ(hat(Composition{1, 2}, HatConvention::kSortDecreasing), (Composition{2, 1}));
    EXPECT_EQ(hat(Composition{2, 1}, HatConvention::kSortIncreasing), (Composition{1, 2}));
    EXPECT_EQ(hat(Composition{1, 3, 2}, HatConvention::kReverse), (Composition{2, 3, 1}));
    EXPECT_THROW(hat(Composition{1, 2}, HatConvention::kUnresolved), UnresolvedHatConvention);
}

TEST(Tower, OnlySortDecreasingValidates) {
    std::vector<LabeledMatrix> direct;
    for (int k = 0; k <= 4; ++k) direct.push_back(k >= 2 ? m_matrix_direct(k) : LabeledMatrix());
    for (const auto& c : resolve_hat_convention(direct, 4))
        EXPECT_EQ(c.validated, c.convention == HatConvention::kSortDecreasing) << to_string(c.convention);
}

TEST(Tower, TMatrix) {
    auto t = t_matrix(2, kValidatedHat);
    EXPECT_EQ(t(Composition{1, 1}, Composition{1, 1}), Poly(1));
    EXPECT_EQ(t(Composition{2}, Composition{2}), Poly(1));
    auto t3 = t_matrix(3, kValidatedHat);
    EXPECT_EQ(t3(Composition{1, 2}, Composition{2, 1}), Poly(1));
    EXPECT_TRUE(t3(Composition{2, 1}, Composition{1, 2}).is_zero());
}

TEST(Tower, KMatrixBaseCase) {
    EXPECT_TRUE(k_matrix(1).is_identity());
    auto k2 = k_matrix(2);
    EXPECT_EQ(k2.at(0, 1), Poly(-1));
    EXPECT_EQ(k2.at(1, 1), Poly(-1));
}

TEST(Tower, ArgumentChecks) {
    EXPECT_THROW(z_matrix(0), std::invalid_argument);
    EXPECT_THROW(m_matrix_direct(-1), std::invalid_argument);
}

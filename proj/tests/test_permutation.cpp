#include "hecke/permutation.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hecke;

namespace {
Permutation word(std::vector<int> w, int n) { return Permutation::from_word(w, n); }
}  // namespace

TEST(Permutation, ApplyGenerator) {
    auto e = Permutation::identity(3);
    auto [s1, d1] = e.apply_gen(1);
    EXPECT_EQ(s1, word({1}, 3));
    EXPECT_EQ(d1, 1);
    auto [back, d2] = s1.apply_gen(1);
    EXPECT_EQ(back, e);
    EXPECT_EQ(d2, -1);
    auto [s12, d3] = s1.apply_gen(2);
    EXPECT_EQ(s12, word({1, 2}, 3));
    EXPECT_EQ(d3, 1);
    EXPECT_THROW(e.apply_gen(3), std::out_of_range);
    EXPECT_THROW(e.apply_gen(0), std::out_of_range);
}

TEST(Permutation, LengthIsInversionCount) {
    for_each_permutation(5, [](const Permutation& w) {
        EXPECT_EQ(w.length(), static_cast<int>(w.reduced_word().size()));
        EXPECT_EQ(Permutation::from_word(w.reduced_word(), 5), w);
    });
}

TEST(Permutation, BraidRelationsHold) {
    // Matsumoto: words related by braid moves give the same element
    EXPECT_EQ(word({1, 2, 1}, 4), word({2, 1, 2}, 4));
    EXPECT_EQ(word({1, 3}, 4), word({3, 1}, 4));
    EXPECT_EQ(word({1, 1}, 4), Permutation::identity(4));
    EXPECT_EQ(word({1, 2, 1}, 3).length(), 3);
}

TEST(Permutation, GroupLaws) {
    for_each_permutation(4, [](const Permutation& a) {
        EXPECT_EQ(a * a.inverse(), Permutation::identity(4));
        EXPECT_EQ(a.inverse().length(), a.length());
        for_each_permutation(4, [&](const Permutation& b) { EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse()); });
    });
}

TEST(Permutation, Transposition) {
    auto t = Permutation::transposition(1, 3, 3);
    EXPECT_EQ(t.length(), 3);
    EXPECT_EQ(t, word({1, 2, 1}, 3));
    EXPECT_EQ(t.cycle_type(), (Composition{2, 1}));
}

TEST(IncreasingElement, Examples) {
    EXPECT_EQ(increasing_element(Composition{1, 2, 1}, 7), word({1, 3, 4, 6}, 7));
    EXPECT_EQ(increasing_element(Composition{2}, 3), word({1, 2}, 3));
    EXPECT_THROW(increasing_element(Composition{1, 1}, 3), std::invalid_argument);
    EXPECT_EQ(increasing_element(Composition{}, 3), Permutation::identity(3));
}

TEST(IncreasingElement, HasShapeBarAndMinimalLength) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : enumerate_partitions(n)) {
            auto shape = minus_one(mu);
            auto w = increasing_element(shape, n);
            EXPECT_EQ(w.cycle_type(), mu);
            EXPECT_EQ(w.length(), shape.size());
            auto mins = minimal_class_elements(mu);
            ASSERT_FALSE(mins.empty());
            EXPECT_EQ(mins.front().length(), w.length());
            EXPECT_NE(std::find(mins.begin(), mins.end(), w), mins.end());
        }
}

TEST(CycleType, Examples) {
    EXPECT_EQ(Permutation::identity(3).cycle_type(), (Composition{1, 1, 1}));
    EXPECT_EQ(word({1, 2}, 3).cycle_type(), (Composition{3}));
    EXPECT_EQ(word({1, 3, 4, 6}, 7).cycle_type(), (Composition{3, 2, 2}));
}

TEST(MinimalClassElements, S3) {
    EXPECT_EQ(minimal_class_elements(Composition{1, 1, 1}), std::vector<Permutation>{Permutation::identity(3)});
    auto three = minimal_class_elements(Composition{3});
    EXPECT_EQ(std::set<Permutation>(three.begin(), three.end()), (std::set<Permutation>{word({1, 2}, 3), word({2, 1}, 3)}));
    auto two = minimal_class_elements(Composition{2, 1});
    EXPECT_EQ(std::set<Permutation>(two.begin(), two.end()), (std::set<Permutation>{word({1}, 3), word({2}, 3)}));
}

TEST(SymmetricGroup, IndexingAndGuard) {
    auto g = SymmetricGroup::get(5);
    EXPECT_EQ(g->order(), 120u);
    for (std::size_t i = 0; i < g->order(); ++i) EXPECT_EQ(g->index_of(g->element(i)), i);
    EXPECT_THROW(SymmetricGroup::get(kMaxRank + 1), ResourceLimit);
}

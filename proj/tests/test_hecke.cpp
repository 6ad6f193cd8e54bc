#include "hecke/center_basis.hpp"
#include "hecke/hecke_algebra.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace hecke;

namespace {

Permutation word(std::vector<int> w, int n) { return Permutation::from_word(w, n); }
HeckeElement T(std::vector<int> w, int n) { return HeckeElement::basis(word(w, n)); }
const Poly kXi = Poly::xi();

HeckeElement random_element(std::mt19937& rng, int n, int terms) {
    HeckeElement h(n);
    std::uniform_int_distribution<std::size_t> pick(0, h.group().order() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int t = 0; t < terms; ++t) h += HeckeElement::basis(h.group().element(pick(rng))) * Poly({coef(rng), coef(rng)});
    return h;
}

/// p^λ by enumerating increasing index tuples and multiplying with the
/// generic product.
HeckeElement naive_eval_p(const Composition& lambda, int n) {
    HeckeElement out(n);
    const int r = lambda.length();
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(idx.size()) == r) {
            HeckeElement term = HeckeElement::one(n);
            for (int t = 0; t < r; ++t)
                for (int e = 0; e < lambda[t]; ++e) term = term * jm(idx[t], n);
            out += term;
            return;
        }
        for (int j = from; j <= n; ++j) {
            idx.push_back(j);
            rec(j + 1);
            idx.pop_back();
        }
    };
    rec(1);
    return out;
}

}  // namespace

TEST(Hecke, GeneratorProducts) {
    EXPECT_EQ(T({1}, 3) * T({1}, 3), HeckeElement::one(3) + T({1}, 3) * kXi);
    EXPECT_EQ(T({1}, 3) * T({2}, 3), T({1, 2}, 3));
    EXPECT_EQ(T({1, 2}, 3) * T({1}, 3), T({1, 2, 1}, 3));
    EXPECT_EQ(T({1}, 3).mul_gen(1), HeckeElement::one(3) + T({1}, 3) * kXi);
}

TEST(Hecke, IdentityAndZero) {
    auto a = T({1, 2}, 3) * Poly({2, 1}) + T({2}, 3);
    EXPECT_EQ(a * HeckeElement::one(3), a);
    EXPECT_EQ(HeckeElement::one(3) * a, a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ((a - a).support_size(), 0u);
}

TEST(Hecke, RankMismatchThrows) {
    EXPECT_THROW(HeckeElement::one(3) * HeckeElement::one(4), std::invalid_argument);
}

TEST(Hecke, BraidRelations) {
    for (int n = 3; n <= 5; ++n)
        for (int i = 1; i + 1 < n; ++i) {
            EXPECT_EQ(T({i, i + 1, i}, n), T({i}, n) * T({i + 1}, n) * T({i}, n));
            EXPECT_EQ(T({i}, n) * T({i + 1}, n) * T({i}, n), T({i + 1}, n) * T({i}, n) * T({i + 1}, n));
        }
}

TEST(Hecke, ProductOfBasisElementsMatchesReducedWords) {
    // T_x T_y = T_{xy} whenever lengths add
    for_each_permutation(4, [](const Permutation& x) {
        for_each_permutation(4, [&](const Permutation& y) {
            if ((x * y).length() == x.length() + y.length())
                EXPECT_EQ(HeckeElement::basis(x) * HeckeElement::basis(y), HeckeElement::basis(x * y));
        });
    });
}

TEST(HeckeProperty, Associativity) {
    std::mt19937 rng(5);
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t < 8; ++t) {
            auto a = random_element(rng, n, 3), b = random_element(rng, n, 3), c = random_element(rng, n, 3);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
        }
}

TEST(Hecke, JucysMurphyElements) {
    EXPECT_TRUE(jm(1, 4).is_zero());
    EXPECT_EQ(jm(2, 3), T({1}, 3));
    EXPECT_EQ(jm(3, 3), T({1, 2, 1}, 3) + T({2}, 3));
    EXPECT_EQ(jm(2, 3) * jm(2, 3), HeckeElement::one(3) + T({1}, 3) * kXi);
    EXPECT_THROW(jm(0, 3), std::out_of_range);
    EXPECT_THROW(jm(4, 3), std::out_of_range);
}

TEST(HeckeProperty, JucysMurphyCommute) {
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) EXPECT_EQ(jm(i, n) * jm(j, n), jm(j, n) * jm(i, n));
}

TEST(Hecke, FastJucysMurphyProductMatchesGeneric) {
    std::mt19937 rng(6);
    for (int n = 2; n <= 6; ++n)
        for (int j = 1; j <= n; ++j) {
            auto h = random_element(rng, n, 4);
            EXPECT_EQ(mul_jm(h, j), h * jm(j, n));
        }
}

TEST(Hecke, EvalPExamples) {
    EXPECT_EQ(eval_p(Composition{}, 3), HeckeElement::one(3));
    EXPECT_EQ(eval_p(Composition{1}, 3), jm(2, 3) + jm(3, 3));
    EXPECT_EQ(specialize(eval_p(Composition{2}, 3)).coeff(word({1, 2}, 3)), 1);
    EXPECT_TRUE(eval_p(Composition{1, 1, 1, 1}, 3).is_zero());
}

TEST(Hecke, EvalPMatchesTupleEnumeration) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : compositions_below(5)) EXPECT_EQ(eval_p(lambda, n), naive_eval_p(lambda, n)) << lambda;
}

TEST(Hecke, EvalMExamples) {
    EXPECT_TRUE(eval_m(Composition{1, 1, 1}, 3).is_zero());
    EXPECT_EQ(specialize(eval_m(Composition{2}, 3)).coeff(Permutation::identity(3)), 3);
    EXPECT_EQ(specialize(eval_m(Composition{4, 3}, 3)).coeff(word({1}, 3)), 8);
    EXPECT_EQ(eval_m(Composition{2}, 3).coeff(word({1}, 3)), Poly({0, 2}));
    EXPECT_EQ(eval_m(Composition{2, 1}, 4), eval_p(Composition{2, 1}, 4) + eval_p(Composition{1, 2}, 4));
    EXPECT_THROW(eval_m(Composition{1, 2}, 4), std::invalid_argument);
}

TEST(Hecke, MonomialTwoTwoInH3) {
    // A parity count forces even xi-degrees in the coefficient of s1 s2.
    EXPECT_EQ(eval_m(Composition{2, 2}, 3).coeff(word({1, 2}, 3)), Poly({1, 0, 4, 0, 1}));
}

TEST(Hecke, Centrality) {
    EXPECT_TRUE(is_central(HeckeElement::one(3)));
    EXPECT_FALSE(is_central(T({1}, 3)));
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 4; ++k)
            for (const auto& lambda : enumerate_partitions(k)) EXPECT_TRUE(is_central(eval_m(lambda, n))) << lambda << " n=" << n;
}

TEST(Hecke, Specialization) {
    EXPECT_EQ(specialize(HeckeElement::one(3) + T({1}, 3) * kXi), GroupAlgebraElement::one(3));
    GroupAlgebraElement three_cycles(3);
    three_cycles.set_coeff(word({1, 2}, 3), 1);
    three_cycles.set_coeff(word({2, 1}, 3), 1);
    EXPECT_EQ(class_sum(Composition{3}), three_cycles);
}

TEST(HeckeProperty, SpecializationIsAHomomorphism) {
    std::mt19937 rng(7);
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t < 10; ++t) {
            auto a = random_element(rng, n, 4), b = random_element(rng, n, 4);
            EXPECT_EQ(specialize(a * b), specialize(a) * specialize(b));
            EXPECT_EQ(specialize(a + b), specialize(a) + specialize(b));
        }
}

TEST(HeckeProperty, ParityOfXiDegrees) {
    // In a product of d reflections the coefficient of T_w has xi-degrees
    // congruent to d - l(w) mod 2.
    for (int k = 1; k <= 4; ++k)
        for (const auto& lambda : enumerate_partitions(k)) {
            auto h = eval_m(lambda, 4);
            for (const auto& [w, c] : h.terms())
                for (int e = 0; e <= c.degree(); ++e)
                    if (c.coeff(e) != 0) EXPECT_EQ((k - w.length() - e) % 2, 0) << lambda << " " << w;
        }
}

TEST(Hecke, GroupAlgebraMatchesSpecializedHecke) {
    for (const auto& lambda : compositions_below(5))
        EXPECT_EQ(eval_p<Integer>(lambda, 4), specialize(eval_p(lambda, 4)));
}

#include <gtest/gtest.h>

#include <random>

#include "weakq/cartan.hpp"

using namespace weakq;

TEST(Validate, A2IsSymmetric) {
    CartanData c = validate({{2, -1}, {-1, 2}});
    EXPECT_EQ(c.d, (std::vector<int>{1, 1}));
}

TEST(Validate, B2Symmetrizer) {
    CartanData c = validate({{2, -2}, {-1, 2}});
    EXPECT_EQ(c.d, (std::vector<int>{1, 2}));
    EXPECT_EQ(c.d[0] * c.entry(1, 2), c.d[1] * c.entry(2, 1));
}

TEST(Validate, RejectsAsymmetricZeroPattern) {
    try {
        validate({{2, -1}, {0, 2}});
        FAIL() << "expected CartanError";
    } catch (const CartanError& e) {
        EXPECT_EQ(e.kind, CartanError::Kind::Shape);
    }
}

TEST(Validate, RejectsNonFiniteType) {
    // Affine A1~: determinant zero.
    try {
        validate({{2, -2}, {-2, 2}});
        FAIL() << "expected CartanError";
    } catch (const CartanError& e) {
        EXPECT_EQ(e.kind, CartanError::Kind::NotFiniteType);
    }
}

TEST(Validate, RejectsBadDiagonal) {
    EXPECT_THROW(validate({{1, 0}, {0, 2}}), CartanError);
    EXPECT_THROW(validate({{2, 1}, {1, 2}}), CartanError);
    EXPECT_THROW(validate({{2, -1, 0}, {-1, 2, -1}}), CartanError);
}

TEST(Reflect, Examples) {
    CartanData a2 = cartan_by_name("A2");
    std::vector<int> alpha1{1, 0}, alpha2{0, 1};
    EXPECT_EQ(reflect(a2, 1, alpha1), (std::vector<int>{-1, 0}));
    EXPECT_EQ(reflect(a2, 1, alpha2), (std::vector<int>{1, 1}));
}

TEST(Reflect, InvolutionAndInnerProduct) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-4, 4);
    for (const char* name : {"A2", "B2", "G2", "A3", "B3", "C3", "D4"}) {
        CartanData c = cartan_by_name(name);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<int> v(static_cast<size_t>(c.n)), u(static_cast<size_t>(c.n));
            for (auto& x : v) x = coord(rng);
            for (auto& x : u) x = coord(rng);
            for (int i = 1; i <= c.n; ++i) {
                EXPECT_EQ(reflect(c, i, reflect(c, i, v)), v);
                EXPECT_EQ(c.inner(reflect(c, i, u), reflect(c, i, v)), c.inner(u, v));
            }
        }
    }
}

TEST(PositiveRoots, CountsByType) {
    EXPECT_EQ(positive_roots(cartan_by_name("A1")).ell0, 1);
    EXPECT_EQ(positive_roots(cartan_by_name("A2")).ell0, 3);
    EXPECT_EQ(positive_roots(cartan_by_name("A3")).ell0, 6);
    EXPECT_EQ(positive_roots(cartan_by_name("A4")).ell0, 10);
    EXPECT_EQ(positive_roots(cartan_by_name("B2")).ell0, 4);
    EXPECT_EQ(positive_roots(cartan_by_name("B3")).ell0, 9);
    EXPECT_EQ(positive_roots(cartan_by_name("C3")).ell0, 9);
    EXPECT_EQ(positive_roots(cartan_by_name("D4")).ell0, 12);
    EXPECT_EQ(positive_roots(cartan_by_name("G2")).ell0, 6);
}

TEST(PositiveRoots, A2Explicit) {
    RootSystem rs = positive_roots(cartan_by_name("A2"));
    std::vector<std::vector<int>> expect{{0, 1}, {1, 0}, {1, 1}};
    std::sort(expect.begin(), expect.end());
    std::vector<std::vector<int>> got = rs.positive_roots;
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expect);
}

TEST(LongestWord, Examples) {
    EXPECT_EQ(longest_word(cartan_by_name("A1")).indices, (std::vector<int>{1}));
    EXPECT_EQ(longest_word(cartan_by_name("A2")).indices, (std::vector<int>{1, 2, 1}));
    EXPECT_EQ(longest_word(cartan_by_name("B2")).indices.size(), 4u);
    EXPECT_EQ(longest_word(cartan_by_name("G2")).indices.size(), 6u);
}

// The prefix products s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) must enumerate the
// positive roots exactly once; this indexes the PBW positions.
TEST(LongestWord, PrefixProductsEnumeratePositiveRoots) {
    for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"}) {
        CartanData c = cartan_by_name(name);
        WeylWord w0 = longest_word(c);
        RootSystem rs = positive_roots(c);
        ASSERT_EQ(static_cast<int>(w0.indices.size()), rs.ell0) << name;
        std::vector<std::vector<int>> seen;
        for (size_t k = 0; k < w0.indices.size(); ++k) {
            std::vector<int> beta(static_cast<size_t>(c.n), 0);
            beta[static_cast<size_t>(w0.indices[k] - 1)] = 1;
            for (size_t t = k; t-- > 0;) beta = reflect(c, w0.indices[t], beta);
            seen.push_back(beta);
        }
        std::sort(seen.begin(), seen.end());
        std::vector<std::vector<int>> all = rs.positive_roots;
        std::sort(all.begin(), all.end());
        EXPECT_EQ(seen, all) << name;
    }
}

TEST(Kostant, Examples) {
    CartanData a2 = cartan_by_name("A2");
    EXPECT_EQ(kostant_count(a2, {1, 1}), 2);
    EXPECT_EQ(kostant_count(a2, {0, 0}), 1);
    EXPECT_EQ(kostant_count(a2, {2, 2}), 3);
    EXPECT_EQ(kostant_count(a2, {2, 1}), 2);
    EXPECT_THROW(kostant_count(a2, {-1, 0}), std::domain_error);
}

TEST(OrderM, Examples) {
    EXPECT_EQ(order_m(cartan_by_name("A2"), 1, 2), 3);
    EXPECT_EQ(order_m(cartan_by_name("B2"), 1, 2), 4);
    EXPECT_EQ(order_m(cartan_by_name("G2"), 1, 2), 6);
    EXPECT_EQ(order_m(cartan_by_name("A3"), 1, 3), 2);
    EXPECT_THROW(order_m(cartan_by_name("A2"), 1, 1), std::domain_error);
}

TEST(DynkinComponents, SupportRestriction) {
    CartanData a3 = cartan_by_name("A3");
    EXPECT_EQ(dynkin_components(a3, {1, 2}), (std::vector<std::vector<int>>{{1, 2}}));
    EXPECT_EQ(dynkin_components(a3, {1, 3}), (std::vector<std::vector<int>>{{1}, {3}}));
    EXPECT_TRUE(dynkin_components(a3, {}).empty());
}

TEST(Subcartan, GcdReducesSymmetrizer) {
    CartanData b3 = cartan_by_name("B3");
    // Restricting to the two long roots gives A2 with minimal d = (1,1).
    CartanData sub = subcartan(b3, {1, 2});
    EXPECT_EQ(sub.d, (std::vector<int>{1, 1}));
}

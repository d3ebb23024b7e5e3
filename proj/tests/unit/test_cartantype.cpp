#include <gtest/gtest.h>

#include "modlie/cartantype.hpp"
#include "modlie/errors.hpp"
#include "modlie/modrep.hpp"

using namespace modlie;

TEST(DividedPowers, Dimensions) {
    EXPECT_EQ(build_O(2, {1, 1}, 5).dim(), 25u);
    EXPECT_EQ(build_O(1, {2}, 3).dim(), 9u);
    EXPECT_TRUE(build_O(2, {1, 1}, 5).truncated());
    EXPECT_FALSE(build_O(1, {2}, 3).truncated());
}

TEST(DividedPowers, LucasProducts) {
    auto O = build_O(1, {2}, 3);
    auto x = [&](int a) { return static_cast<std::size_t>(O.index_of({a})); };
    // x^(1) x^(2) = binom(3,1) x^(3) = 0 mod 3, x^(1) x^(3) = binom(4,1) x^(4) = x^(4).
    EXPECT_FALSE(O.basis_product(x(1), x(2)).has_value());
    auto t = O.basis_product(x(1), x(3));
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(t->first, 1);
    EXPECT_EQ(t->second, x(4));
}

TEST(Witt, Dimensions) {
    EXPECT_EQ(build_W(1, {1}, 5).algebra.dim(), 5u);
    EXPECT_EQ(build_W(2, {1, 1}, 5).algebra.dim(), 50u);
    EXPECT_EQ(build_W(2, {1, 1}, 2).algebra.dim(), 8u);
    EXPECT_THROW(build_W(3, {1, 1, 2}, 5), SizeGuard);
}

TEST(Witt, SimpleAndLie) {
    for (auto w : {build_W(1, {1}, 5), build_W(2, {1, 1}, 2), build_W(2, {1, 1}, 5)}) {
        EXPECT_TRUE(w.algebra.check_antisymmetry());
        EXPECT_TRUE(w.algebra.check_jacobi());
        EXPECT_TRUE(is_simple(w.algebra)) << w.algebra.name();
    }
}

TEST(Witt, Gradings) {
    auto w = build_W(2, {1, 1}, 5);
    auto std_grading = grade_W(w, {1, 1});
    EXPECT_TRUE(std_grading.additive);
    EXPECT_EQ(std_grading.components.begin()->first, -1);
    EXPECT_EQ(std_grading.components.rbegin()->first, 7);
    EXPECT_EQ(std_grading.component_dim(-1), 2u);
    auto g10 = grade_W(w, {1, 0});
    EXPECT_EQ(g10.component_dim(-1), 5u);
    EXPECT_EQ(grade_W(w, {0, 0}).components.size(), 1u);
}

TEST(Hamiltonian, DH) {
    auto O = build_O(2, {1, 1}, 5);
    Vec v = D_H(O, O.monomial({2, 0}));
    Vec want(50, 0);
    want[static_cast<std::size_t>(O.index_of({1, 0})) * 2 + 1] = 2;
    EXPECT_EQ(v, want);
}

TEST(Hamiltonian, Dimensions) {
    auto h = build_H2(5);
    EXPECT_EQ(h.second_derived.algebra.dim(), 23u);
    EXPECT_EQ(h.full.algebra.dim(), 26u);
    EXPECT_TRUE(is_simple(h.second_derived.algebra));
    EXPECT_TRUE(h.full.algebra.check_jacobi());
}

TEST(Poisson, Bracket) {
    auto L = build_poisson_H(5);
    EXPECT_EQ(L.dim(), 23u);
    const auto x1sq = static_cast<std::size_t>(poisson_index(5, 2, 0));
    const auto x2 = static_cast<std::size_t>(poisson_index(5, 0, 1));
    const auto x1 = static_cast<std::size_t>(poisson_index(5, 1, 0));
    EXPECT_EQ(L.structure_constant(x1sq, x2, x1), 2);
    EXPECT_TRUE(L.check_jacobi());
    EXPECT_TRUE(is_simple(L));
}

TEST(Block, Basics) {
    auto L = build_block(5);
    EXPECT_EQ(L.dim(), 24u);
    auto v = [](int a, int b) { return static_cast<std::size_t>(block_index(5, a, b)); };
    EXPECT_EQ(L.structure_constant(v(1, 0), v(0, 1), v(1, 1)), 1);
    EXPECT_EQ(L.structure_constant(v(1, 0), v(4, 1), v(0, 1)), 1);
    EXPECT_TRUE(L.check_jacobi());
    EXPECT_TRUE(is_simple(L));
}

TEST(AlbertZassenhaus, Basics) {
    auto L = build_AZ(5);
    EXPECT_EQ(L.dim(), 25u);
    EXPECT_TRUE(L.check_jacobi());
    const FiniteField& F = *L.field();
    for (std::size_t b = 0; b < 25; ++b) EXPECT_EQ(L.structure_constant(0, b, b), b == 0 ? 0 : static_cast<Elem>(b));
    EXPECT_TRUE(is_simple(L));
    (void)F;
}

TEST(Contact, K3) {
    auto O = build_O(3, {1, 1, 1}, 5);
    Vec d1 = D_K(O, O.one());
    Vec want(375, 0);
    want[2] = 2;
    EXPECT_EQ(d1, want);
    auto K = build_K3(5);
    EXPECT_EQ(K.algebra.dim(), 125u);
    EXPECT_TRUE(K.algebra.check_jacobi_sampled(5000, 7));
}

TEST(Special, S3) {
    auto S = build_S3(5);
    EXPECT_EQ(S.algebra.dim(), 248u);
    auto O = build_O(3, {1, 1, 1}, 5);
    for (const auto& f : S.fields) {
        Vec d = field_divergence(O, f);
        EXPECT_TRUE(std::all_of(d.begin(), d.end(), [](Elem c) { return c == 0; }));
    }
    auto g = grade_S3(S);
    EXPECT_TRUE(g.additive);
    EXPECT_EQ(g.components.rbegin()->first, 1);
    EXPECT_EQ(g.component_dim(1), 24u);
    EXPECT_EQ(g.component_dim(0), 50u);
}

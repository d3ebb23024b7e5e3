#include <gtest/gtest.h>

#include "modlie/errors.hpp"
#include "modlie/rootdata.hpp"
#include "modlie/weisfeiler.hpp"

using namespace modlie;

namespace {

Subspace borel(const ChevalleyAlgebra& g) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < g.roots.num_pos(); ++i) idx.push_back(g.pos_index(i));
    for (int i = 0; i < g.roots.rank; ++i) idx.push_back(g.h_index(i));
    return Subspace::coordinate(g.algebra.field(), g.algebra.dim(), idx);
}

}  // namespace

TEST(Weisfeiler, Sl2Borel) {
    auto g = build_g("A1", 5);
    const LieAlgebra& L = g->algebra;
    Subspace B = borel(*g);
    Subspace m1 = choose_minus_one(L, B);
    EXPECT_TRUE(m1.is_full());
    Filtration f = build_filtration(L, B, m1);
    EXPECT_EQ(f.dims(), (std::vector<std::size_t>{3, 2, 1, 0}));
    EXPECT_EQ(f.q, 1);
    EXPECT_EQ(f.r, 1);
    EXPECT_TRUE(check_compatibility(f));
    EXPECT_TRUE(check_p_compatibility(f));
    GradedAlgebra G = graded_algebra(f);
    EXPECT_TRUE(G.algebra.check_jacobi());
    EXPECT_TRUE(G.grading.additive);
    EXPECT_EQ(max_graded_ideal_neg(G).dim(), 0u);
    EXPECT_TRUE(is_simple(G.algebra));
}

TEST(Weisfeiler, A2MaximalParabolic) {
    auto g = build_g("A2", 7);
    const LieAlgebra& L = g->algebra;
    Subspace P = subspace_sum(borel(*g), Subspace::coordinate(L.field(), L.dim(), {g->neg_index(g->simple_index(0))}));
    Subspace m1 = choose_minus_one(L, P, 3);
    EXPECT_TRUE(m1.is_full());
    Filtration f = build_filtration(L, P, m1, 3);
    EXPECT_EQ(f.dims(), (std::vector<std::size_t>{8, 6, 2, 0}));
    EXPECT_TRUE(check_compatibility(f));
    GradedAlgebra G = graded_algebra(f);
    std::size_t total = 0;
    for (auto [d, k] : G.dims()) total += k;
    EXPECT_EQ(total, 8u);
    EXPECT_TRUE(G.algebra.check_jacobi());
    auto N = max_graded_ideal_neg(G);
    EXPECT_TRUE(is_ideal(G.algebra, N.space));
}

TEST(Weisfeiler, NonMaximalStalls) {
    auto g = build_g("A2", 7);
    const LieAlgebra& L = g->algebra;
    Subspace B = borel(*g);
    Subspace m1 = choose_minus_one(L, B, 3);
    EXPECT_EQ(m1.dim(), 6u);
    EXPECT_THROW(build_filtration(L, B, m1), NotStable);
}

TEST(Weisfeiler, RejectsBadInput) {
    auto g = build_g("A1", 5);
    const LieAlgebra& L = g->algebra;
    Subspace B = borel(*g);
    EXPECT_THROW(build_filtration(L, B, B), NotStable);
}

#include <gtest/gtest.h>

#include "modlie/errors.hpp"
#include "modlie/field.hpp"
#include "modlie/matrix.hpp"
#include "modlie/poly.hpp"
#include "modlie/rootdata.hpp"

using namespace modlie;

namespace {

Field F5() { return FiniteField::get(5); }

}  // namespace

TEST(Field, PrimeAndExtensionSizes) {
    for (int p : {2, 3, 5, 7, 11, 13}) {
        auto f = FiniteField::get(p);
        EXPECT_EQ(f->order(), p);
        auto f2 = FiniteField::get(p, 2);
        EXPECT_EQ(f2->order(), p * p);
        EXPECT_TRUE(is_irreducible_over_prime(f2->modulus(), p));
    }
    EXPECT_EQ(FiniteField::get(5).get(), FiniteField::get(5).get());
}

TEST(Field, FrobeniusFixesPrimeSubfieldOnly) {
    auto f = FiniteField::get(5, 2);
    for (int a = 0; a < f->order(); ++a) {
        const auto x = static_cast<Elem>(a);
        EXPECT_EQ(f->frobenius(x) == x, f->in_prime_field(x)) << a;
        for (int b = 0; b < f->order(); ++b) {
            const auto y = static_cast<Elem>(b);
            EXPECT_EQ(f->frobenius(f->add(x, y)), f->add(f->frobenius(x), f->frobenius(y)));
        }
    }
}

TEST(Field, InversesAndPowers) {
    auto f = FiniteField::get(7, 2);
    for (int a = 1; a < f->order(); ++a) {
        const auto x = static_cast<Elem>(a);
        EXPECT_EQ(f->mul(x, f->inv(x)), 1);
        EXPECT_EQ(f->pow(x, static_cast<unsigned long long>(f->order() - 1)), 1);
    }
}

TEST(Rref, Examples) {
    auto f = F5();
    Matrix id = Matrix::identity(f, 3);
    EXPECT_EQ(rref(id), id);
    EXPECT_EQ(rref(Matrix::from_ints(f, {{2, 4}, {1, 2}})), Matrix::from_ints(f, {{1, 2}, {0, 0}}));
    Matrix z(f, 3, 4);
    EXPECT_EQ(rref(z), z);
}

TEST(Kernel, Examples) {
    auto f = F5();
    EXPECT_TRUE(kernel(Matrix::from_ints(f, {{1, 0}, {0, 1}})).is_zero());
    Subspace k = kernel(Matrix::from_ints(f, {{1, 2}}));
    ASSERT_EQ(k.dim(), 1u);
    EXPECT_TRUE(k.contains(Vec{3, 1}));

    auto g = build_g("A1", 5);
    const LieAlgebra& L = g->algebra;
    EXPECT_EQ(kernel(L.ad(L.basis_vector(g->simple_index(0)))).dim(), 1u);
}

TEST(Solve, Examples) {
    auto f = F5();
    Rng rng(3);
    Matrix rhs = rng.matrix(f, 3, 2);
    auto x = solve(Matrix::identity(f, 3), rhs);
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, rhs);
    Matrix z(f, 2, 2);
    EXPECT_FALSE(solve(z, Matrix::from_ints(f, {{1}, {0}})));
}

TEST(Subspace, SumAndIntersection) {
    auto f = F5();
    Rng rng(11);
    Subspace a = rng.subspace(f, 6, 3);
    EXPECT_EQ(subspace_sum(a, a), a);
    EXPECT_EQ(subspace_intersect(a, a), a);

    Subspace x = Subspace::coordinate(f, 3, {0});
    Subspace yz = Subspace::coordinate(f, 3, {1, 2});
    EXPECT_TRUE(subspace_sum(x, yz).is_full());
    EXPECT_TRUE(subspace_intersect(x, yz).is_zero());

    Subspace u = rng.subspace(f, 50, 24), v = rng.subspace(f, 50, 24);
    EXPECT_EQ(u.dim() + v.dim(), subspace_sum(u, v).dim() + subspace_intersect(u, v).dim());
    EXPECT_EQ(subspace_sum(u, v), subspace_sum(v, u));

    EXPECT_THROW(subspace_sum(x, u), AmbientMismatch);
}

TEST(Subspace, RankNullity) {
    for (int p : {2, 3, 5, 13}) {
        auto f = FiniteField::get(p);
        Rng rng(static_cast<std::uint64_t>(p));
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t r = 1 + rng.below(12), c = 1 + rng.below(12);
            Matrix m = rng.matrix(f, r, c);
            if (trial % 3 == 0) m.set_row(0, Vec(c, 0));
            EXPECT_EQ(rank(m) + kernel(m).dim(), c);
            Subspace k = kernel(m);
            for (std::size_t i = 0; i < k.dim(); ++i) EXPECT_TRUE(is_zero(m * k.basis_row(i)));
        }
    }
}

TEST(Poly, FactorExamples) {
    auto f = F5();
    auto fac = factor_squarefree(Poly::from_ints(f, {1, 0, 1}));
    ASSERT_EQ(fac.size(), 2u);
    std::vector<Poly> want = {Poly::from_ints(f, {2, 1}), Poly::from_ints(f, {3, 1})};
    EXPECT_TRUE((fac[0] == want[0] && fac[1] == want[1]) || (fac[0] == want[1] && fac[1] == want[0]));

    for (int p : {2, 7}) {
        auto g = FiniteField::get(p);
        auto fx = factor_squarefree(Poly::x(g));
        ASSERT_EQ(fx.size(), 1u);
        EXPECT_EQ(fx[0], Poly::x(g));
    }
}

TEST(Poly, CharpolyOfRandomMatrixFactorsBack) {
    auto f = F5();
    Rng rng(50);
    Matrix m = rng.matrix(f, 50, 50);
    Poly cp = charpoly(m);
    EXPECT_EQ(cp.degree(), 50);
    auto fac = factor_squarefree(cp);
    int deg = 0;
    Poly prod = Poly::constant(f, 1);
    for (const auto& q : fac) {
        EXPECT_TRUE(is_irreducible(q));
        deg += q.degree();
        prod = prod * q;
    }
    EXPECT_EQ(deg, 50);
    EXPECT_EQ(prod, cp.monic());
    EXPECT_TRUE(evaluate(cp, m).is_zero());
}

TEST(Poly, LucasBinomial) {
    EXPECT_EQ(lucas_binom(6, 3, 5), 0);
    EXPECT_EQ(lucas_binom(8, 4, 5), 0);
    for (int p : {2, 3, 5, 7})
        for (std::uint64_t a = 0; a < 40; ++a) EXPECT_EQ(lucas_binom(a, 0, p), 1);
    // Against Pascal's triangle.
    for (int p : {2, 3, 5, 7, 13}) {
        std::vector<std::vector<int>> c(60, std::vector<int>(60, 0));
        for (int a = 0; a < 60; ++a) {
            c[a][0] = 1;
            for (int b = 1; b <= a; ++b) c[a][b] = (c[a - 1][b - 1] + c[a - 1][b]) % p;
        }
        for (int a = 0; a < 60; ++a)
            for (int b = 0; b < 60; ++b)
                EXPECT_EQ(lucas_binom(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b), p), c[a][b]);
    }
}

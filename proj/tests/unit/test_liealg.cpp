#include <gtest/gtest.h>

#include <sstream>

#include "modlie/cartantype.hpp"
#include "modlie/errors.hpp"
#include "modlie/liealg.hpp"
#include "modlie/rootdata.hpp"

using namespace modlie;

namespace {

struct Sl2 {
    std::shared_ptr<const ChevalleyAlgebra> g = build_g("A1", 5);
    const LieAlgebra& L = g->algebra;
    Vec e = L.basis_vector(0), h = L.basis_vector(1), f = L.basis_vector(2);
    Subspace span(std::vector<Vec> v) const { return Subspace::span(L.field(), L.dim(), v); }
};

}  // namespace

TEST(Bracket, Sl2) {
    Sl2 s;
    EXPECT_EQ(s.L.bracket(s.e, s.f), s.h);
    EXPECT_EQ(s.L.bracket(s.h, s.e), scaled(*s.L.field(), 2, s.e));
    Element x = make_element(s.L, s.e), y = make_element(s.L, s.f);
    EXPECT_EQ(bracket(s.L, x, y).coords, s.h);
    LieAlgebra other = build_g("A1", 7)->algebra;
    EXPECT_THROW(bracket(other, x, y), ParentMismatch);
}

TEST(Bracket, PoissonConstantsDropOut) {
    LieAlgebra P = build_poisson_H(5);
    const auto x1 = static_cast<std::size_t>(poisson_index(5, 1, 0));
    const auto x2 = static_cast<std::size_t>(poisson_index(5, 0, 1));
    const auto x1sq = static_cast<std::size_t>(poisson_index(5, 2, 0));
    EXPECT_TRUE(is_zero(P.bracket_basis(x1, x2)));
    Vec want = P.zero();
    want[x1] = 2;
    EXPECT_EQ(P.bracket(P.basis_vector(x1sq), P.basis_vector(x2)), want);
}

TEST(Closures, Sl2) {
    Sl2 s;
    EXPECT_EQ(subalgebra_closure(s.L, {s.e}).space, s.span({s.e}));
    EXPECT_TRUE(subalgebra_closure(s.L, {s.e, s.f}).space.is_full());
    for (const auto& x : {s.e, s.h, s.f, add(*s.L.field(), s.e, s.f)}) EXPECT_TRUE(ideal_closure(s.L, {x}).space.is_full());

    Restriction b = restrict_to(s.L, s.span({s.e, s.h}), "b");
    Vec eb = b.coords(s.e);
    EXPECT_EQ(ideal_closure(b.algebra, {eb}).space.dim(), 1u);
}

TEST(Centralizers, Examples) {
    Sl2 s;
    EXPECT_TRUE(center(s.L).space.is_zero());
    EXPECT_EQ(center(build_g("A4", 5)->algebra).dim(), 1u);
    EXPECT_TRUE(center(build_g("A4", 7)->algebra).space.is_zero());
    EXPECT_EQ(centralizer(s.L, s.span({s.e})).space, s.span({s.e}));
    EXPECT_EQ(normalizer(s.L, s.span({s.e})).space, s.span({s.e, s.h}));
}

TEST(Centralizers, CentralizerInsideNormalizer) {
    WittAlgebra W = build_W(2, {1, 1}, 5);
    const LieAlgebra& L = W.algebra;
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
        Subspace v = rng.subspace(L.field(), L.dim(), 1 + rng.below(4));
        auto c = centralizer(L, v), n = normalizer(L, v);
        EXPECT_TRUE(n.space.contains(c.space));
        EXPECT_TRUE(c.is_subalgebra && n.is_subalgebra);
        EXPECT_TRUE(is_subalgebra(L, c.space) && is_subalgebra(L, n.space));
    }
}

TEST(Series, BorelAndSl2) {
    Sl2 s;
    Restriction b = restrict_to(s.L, s.span({s.e, s.h}));
    auto ds = derived_series(b.algebra);
    std::vector<std::size_t> dims;
    for (const auto& x : ds) dims.push_back(x.dim());
    EXPECT_EQ(dims, (std::vector<std::size_t>{2, 1, 0}));
    EXPECT_TRUE(is_solvable(b.algebra));
    EXPECT_FALSE(is_nilpotent(b.algebra));
    EXPECT_FALSE(is_solvable(s.L));
    EXPECT_EQ(derived_series(s.L).back().dim(), 3u);
    EXPECT_TRUE(is_abelian(s.L, s.span({s.h})));
}

TEST(LargestIdeal, Examples) {
    Sl2 s;
    EXPECT_TRUE(largest_ideal_in(s.L, s.span({s.e})).space.is_zero());
    Restriction b = restrict_to(s.L, s.span({s.e, s.h}));
    Subspace n = Subspace::span(b.algebra.field(), 2, {b.coords(s.e)});
    EXPECT_EQ(largest_ideal_in(b.algebra, n).space, n);

    WittAlgebra W = build_W(2, {1, 1}, 5);
    Grading gr = grade_W(W, {1, 1});
    Subspace pos = Subspace::coordinate(W.algebra.field(), W.algebra.dim(), gr.components.at(1));
    for (auto& [d, idx] : gr.components)
        if (d >= 1) pos = subspace_sum(pos, Subspace::coordinate(W.algebra.field(), W.algebra.dim(), idx));
    auto I = largest_ideal_in(W.algebra, pos);
    EXPECT_TRUE(I.is_ideal);
    EXPECT_TRUE(pos.contains(I.space));
}

TEST(PPower, Sl2) {
    Sl2 s;
    EXPECT_EQ(*p_power(s.L, s.e), s.L.zero());
    EXPECT_EQ(*p_power(s.L, s.h), s.h);
    EXPECT_TRUE(is_toral(s.L, s.h));
    EXPECT_FALSE(is_toral(s.L, s.e));
    EXPECT_TRUE(is_ad_nilpotent(s.L, s.e));
    EXPECT_FALSE(is_ad_nilpotent(s.L, s.h));
    EXPECT_EQ(p_closure(s.L, s.span({s.h})).space, s.span({s.h}));
    EXPECT_THROW(p_power(build_g("A4", 5)->algebra, build_g("A4", 5)->algebra.basis_vector(0)), CenterNonzero);
}

TEST(PPower, AdjointLawAndJacobson) {
    for (int p : {2, 5}) {
        WittAlgebra W = build_W(2, {1, 1}, p);
        const LieAlgebra& L = W.algebra;
        const FiniteField& f = *L.field();
        Rng rng(static_cast<std::uint64_t>(p) * 7);
        for (int t = 0; t < 20; ++t) {
            Vec x = rng.vector(f, L.dim()), y = rng.vector(f, L.dim());
            auto xp = p_power(L, x), yp = p_power(L, y), sp = p_power(L, add(f, x, y));
            ASSERT_TRUE(xp && yp && sp);
            EXPECT_EQ(L.ad(*xp), power(L.ad(x), static_cast<unsigned long long>(p)));
            if (p == 2) EXPECT_EQ(*sp, add(f, add(f, *xp, *yp), L.bracket(x, y)));
        }
    }
}

TEST(Derivations, Sl2IsInner) {
    Sl2 s;
    EXPECT_EQ(derivations(s.L).der.algebra.dim(), 3u);
}

TEST(Killing, Sl2) {
    Sl2 s;
    EXPECT_EQ(killing_form(s.L, s.h, s.h), 3);
    EXPECT_EQ(killing_form(s.L, s.e, s.e), 0);
    EXPECT_EQ(killing_form(s.L, s.e, s.f), 4);
}

TEST(Quotient, CommutesWithBracket) {
    SemidirectWO s = build_W_ltimes_O(2, 3);
    const LieAlgebra& L = s.algebra;
    std::vector<std::size_t> o;
    for (std::size_t i = s.W.algebra.dim(); i < L.dim(); ++i) o.push_back(i);
    Subspace O = Subspace::coordinate(L.field(), L.dim(), o);
    Quotient q = quotient(L, O);
    EXPECT_EQ(q.algebra.dim(), s.W.algebra.dim());
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) {
            Vec lhs = q.projection * L.bracket_basis(i, j);
            Vec rhs = q.algebra.bracket(q.projection * L.basis_vector(i), q.projection * L.basis_vector(j));
            ASSERT_EQ(lhs, rhs) << i << " " << j;
        }
    Sl2 sl;
    EXPECT_THROW(quotient(sl.L, sl.span({sl.e})), NotIdeal);
}

TEST(Dump, RoundTripIsBitExact) {
    for (const LieAlgebra& L : {build_g("G2", 7)->algebra, build_AZ(5), build_W(2, {1, 1}, 2).algebra}) {
        const std::string d = dump_string(L);
        std::istringstream in(d);
        LieAlgebra back = read_dump(in);
        EXPECT_EQ(dump_string(back), d);
        EXPECT_EQ(back.table(), L.table());
    }
}

TEST(Dump, RejectsMalformedInput) {
    std::istringstream bad("3 5 1\n0 1 7 1\n");
    EXPECT_THROW(read_dump(bad), ParseError);
}

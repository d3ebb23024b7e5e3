#pragma once

#include <vector>

#include "modlie/cartantype.hpp"
#include "modlie/liealg.hpp"
#include "modlie/matrix.hpp"
#include "modlie/rootdata.hpp"

namespace modlie::fixtures {

// S acting on V through one matrix per basis element of S; V is an abelian ideal.
inline LieAlgebra semidirect(const LieAlgebra& S, const std::vector<Matrix>& rho, std::size_t v) {
    const std::size_t s = S.dim(), n = s + v;
    std::vector<std::string> labels = S.labels();
    for (std::size_t i = 0; i < v; ++i) labels.push_back("v" + std::to_string(i));
    return LieAlgebra::from_bracket(
        S.field(), std::move(labels),
        [&](std::size_t i, std::size_t j) {
            Vec out(n, 0);
            if (i < s && j < s) {
                auto b = S.bracket_basis(i, j);
                std::copy(b.begin(), b.end(), out.begin());
            } else if (i < s) {
                for (std::size_t r = 0; r < v; ++r) out[s + r] = rho[i](r, j - s);
            } else if (j < s) {
                for (std::size_t r = 0; r < v; ++r) out[s + r] = S.field()->neg(rho[j](r, i - s));
            }
            return out;
        },
        "S x| V");
}

inline Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
    while (true) {
        Matrix m = rng.matrix(f, n, n);
        if (rank(m) == n) return m;
    }
}

struct SolvableBySimple {
    LieAlgebra algebra;
    Subspace radical;  // image of V after rebasing
};

// A simple algebra S (sl2 or W(1;1) over F_5) acting on copies of its adjoint
// module and a trivial summand; the basis is scrambled by a random change of basis.
inline SolvableBySimple random_solvable_by_simple(std::uint64_t seed) {
    Rng rng(seed);
    const bool witt = rng.below(2) == 1;
    LieAlgebra S = witt ? build_W(1, {1}, 5).algebra : build_g("A1", 5)->algebra;
    const std::size_t copies = 1 + rng.below(2), trivial = rng.below(3);
    const std::size_t s = S.dim(), v = copies * s + trivial;
    std::vector<Matrix> rho;
    for (std::size_t i = 0; i < s; ++i) {
        Matrix a = S.ad_basis(i), m(S.field(), v, v);
        for (std::size_t c = 0; c < copies; ++c)
            for (std::size_t r = 0; r < s; ++r)
                for (std::size_t k = 0; k < s; ++k) m(c * s + r, c * s + k) = a(r, k);
        rho.push_back(std::move(m));
    }
    LieAlgebra L = semidirect(S, rho, v);
    Matrix u = random_invertible(L.field(), L.dim(), rng);
    LieAlgebra R = rebase(L, u);
    // Old basis vector b_k has new coordinates u^{-1} e_k.
    Matrix uinv = *solve(u, Matrix::identity(L.field(), L.dim()));
    std::vector<Vec> rad;
    for (std::size_t k = s; k < L.dim(); ++k) rad.push_back(uinv.column(k));
    return {R, Subspace::span(L.field(), L.dim(), rad)};
}

}  // namespace modlie::fixtures

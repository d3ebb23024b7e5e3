#include "modlie/weisfeiler.hpp"

#include <algorithm>

#include "modlie/errors.hpp"

namespace modlie {

namespace {

// {x in s : [x, y] in s for every y in t}.
Subspace stabilizer_step(const LieAlgebra& L, const Subspace& s, const Subspace& t) {
    const Field& F = L.field();
    if (s.is_zero() || t.is_zero()) return s;
    const Matrix P = s.projector();
    const std::size_t c = P.rows();
    if (c == 0) return s;
    Matrix cond(F, c * t.dim(), s.dim());
    for (std::size_t k = 0; k < s.dim(); ++k)
        for (std::size_t j = 0; j < t.dim(); ++j) {
            Vec img = P * L.bracket(s.basis_row(k), t.basis_row(j));
            for (std::size_t r = 0; r < c; ++r) cond(j * c + r, k) = img[r];
        }
    Subspace coeffs = kernel(cond);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < coeffs.dim(); ++i) out.push_back(s.combine(coeffs.basis_row(i)));
    return Subspace::span(F, L.dim(), out);
}

}  // namespace

const Subspace& Filtration::at(int i) const {
    if (i <= -q) return chain.at(-q);
    if (i >= r + 1) return chain.at(r + 1);
    return chain.at(i);
}

std::vector<std::size_t> Filtration::dims() const {
    std::vector<std::size_t> out;
    for (int i = -q; i <= r + 1; ++i) out.push_back(chain.at(i).dim());
    return out;
}

Subspace choose_minus_one(const LieAlgebra& ambient, const Subspace& M, std::uint64_t seed) {
    if (M.is_full()) throw NotStable("M must be a proper subalgebra");
    if (!is_subalgebra(ambient, M)) throw NotSubalgebra("choose_minus_one needs a subalgebra");
    GenRep quot = restricted_adjoint(ambient, M).quotient(M);
    auto mins = minimal_submodules(quot, seed);
    if (mins.empty()) throw IterationBudget("no minimal submodule found in the quotient");
    const auto comp = M.complement_indices();
    std::vector<Vec> gens = M.basis_vectors();
    for (std::size_t i = 0; i < mins.front().dim(); ++i) {
        Vec v(ambient.dim(), 0);
        auto row = mins.front().basis_row(i);
        for (std::size_t c = 0; c < comp.size(); ++c) v[comp[c]] = row[c];
        gens.push_back(std::move(v));
    }
    return Subspace::span(ambient.field(), ambient.dim(), gens);
}

Filtration build_filtration(const LieAlgebra& ambient, const Subspace& M, const Subspace& M_minus1, std::uint64_t seed) {
    const Field& F = ambient.field();
    const std::size_t n = ambient.dim();
    if (!is_subalgebra(ambient, M)) throw NotStable("M_(0) is not a subalgebra");
    if (!M_minus1.contains(M) || M_minus1.dim() == M.dim()) throw NotStable("M_(0) must be a proper subspace of M_(-1)");
    if (!M_minus1.contains(bracket_spaces(ambient, M, M_minus1))) throw NotStable("[M_(0), M_(-1)] leaves M_(-1)");

    Filtration f;
    f.ambient = ambient;
    f.minus_one_seed = seed;
    f.chain[0] = M;
    f.chain[-1] = M_minus1;
    int i = -1;
    while (!f.chain[i].is_full()) {
        Subspace next = subspace_sum(f.chain[i], bracket_spaces(ambient, M_minus1, f.chain[i]));
        if (next.dim() == f.chain[i].dim()) throw NotStable("negative part stabilises below the ambient algebra");
        f.chain[--i] = std::move(next);
    }
    f.q = -i;
    i = 0;
    while (!f.chain[i].is_zero()) {
        Subspace next = stabilizer_step(ambient, f.chain[i], M_minus1);
        if (next.dim() == f.chain[i].dim()) throw NotStable("positive part stabilises at a nonzero subspace");
        f.chain[++i] = std::move(next);
    }
    f.r = i - 1;

    // Adapted basis: a greedy complement of M_(i+1) in M_(i), top degree first.
    std::vector<Vec> cols;
    EchelonBuilder eb(F, n);
    for (int d = f.r; d >= -f.q; --d) {
        const Subspace& s = f.chain.at(d);
        for (std::size_t k = 0; k < s.dim(); ++k)
            if (eb.add(s.basis_row(k))) {
                cols.push_back(s.basis_vector(k));
                f.adapted_degree.push_back(d);
            }
    }
    f.adapted = Matrix(F, n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) f.adapted(r, c) = cols[c][r];
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < n; ++c) labels.push_back("g" + std::to_string(f.adapted_degree[c]) + "_" + std::to_string(c));
    f.adapted_algebra = rebase(ambient, f.adapted, labels, ambient.name() + " (adapted)");
    return f;
}

bool check_compatibility(const Filtration& f) {
    const LieAlgebra& A = f.adapted_algebra;
    const auto& deg = f.adapted_degree;
    // In the adapted basis M_(k) is spanned by the basis vectors of degree >= k.
    for (std::size_t a = 0; a < A.dim(); ++a)
        for (std::size_t b = a + 1; b < A.dim(); ++b) {
            const int target = std::max(deg[a] + deg[b], -f.q);
            for (const Term& t : A.sparse(a, b))
                if (deg[t.index] < target) return false;
        }
    // The stored subspaces must be the ones the adapted basis describes.
    const Matrix uinv = *solve(f.adapted, Matrix::identity(A.field(), A.dim()));
    for (int i = -f.q; i <= f.r + 1; ++i)
        for (std::size_t k = 0; k < f.at(i).dim(); ++k) {
            const Vec coords = uinv * f.at(i).basis_row(k);
            for (std::size_t c = 0; c < coords.size(); ++c)
                if (coords[c] && deg[c] < i) return false;
        }
    return true;
}

bool check_p_compatibility(const Filtration& f) {
    const int p = f.ambient.field()->p();
    for (int k = 1; k <= f.r; ++k) {
        const Subspace& target = f.at(p * k);
        const Subspace& s = f.at(k);
        for (std::size_t i = 0; i < s.dim(); ++i) {
            auto y = p_power(f.ambient, s.basis_row(i));
            if (!y || !target.contains(*y)) return false;
        }
    }
    return true;
}

std::map<int, std::size_t> GradedAlgebra::dims() const {
    std::map<int, std::size_t> out;
    for (const auto& [d, idx] : grading.components) out[d] = idx.size();
    return out;
}

GradedAlgebra graded_algebra(const Filtration& f) {
    const LieAlgebra& A = f.adapted_algebra;
    const std::size_t n = A.dim();
    const auto& deg = f.adapted_degree;
    std::vector<Elem> table(n * n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (const Term& t : A.sparse(a, b))
                if (deg[t.index] == deg[a] + deg[b]) table[(a * n + b) * n + t.index] = t.coeff;
    GradedAlgebra g;
    g.algebra = LieAlgebra(A.field(), A.labels(), std::move(table), "gr " + f.ambient.name());
    g.degree = deg;
    g.grading = make_grading(g.algebra, deg);
    return g;
}

SubalgebraHandle max_graded_ideal_neg(const GradedAlgebra& g) {
    std::vector<std::size_t> neg;
    for (std::size_t i = 0; i < g.degree.size(); ++i)
        if (g.degree[i] < 0) neg.push_back(i);
    const LieAlgebra& L = g.algebra;
    SubalgebraHandle N = largest_ideal_in(L, Subspace::coordinate(L.field(), L.dim(), neg));
    // Graded: N is the sum of its intersections with the components.
    std::vector<Vec> parts;
    for (const auto& [d, idx] : g.grading.components) {
        Subspace c = subspace_intersect(N.space, Subspace::coordinate(L.field(), L.dim(), idx));
        auto b = c.basis_vectors();
        parts.insert(parts.end(), b.begin(), b.end());
    }
    if (!(Subspace::span(L.field(), L.dim(), parts) == N.space)) throw NotComputable("largest negative ideal is not graded");
    if (!subspace_intersect(N.space, g.grading.component(L, -1)).is_zero())
        throw NotComputable("largest negative ideal meets the degree -1 component");
    return N;
}

std::map<int, std::size_t> graded_dims(const GradedAlgebra& g, const Subspace& s) {
    std::map<int, std::size_t> out;
    for (const auto& [d, idx] : g.grading.components) {
        const std::size_t k = subspace_intersect(s, Subspace::coordinate(s.field(), s.ambient_dim(), idx)).dim();
        if (k) out[d] = k;
    }
    return out;
}

}  // namespace modlie

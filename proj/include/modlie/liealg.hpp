#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modlie/lie_algebra.hpp"
#include "modlie/matrix.hpp"

namespace modlie {

// A subspace of an algebra with verified closure flags.
struct SubalgebraHandle {
    Subspace space;
    bool is_subalgebra = false;
    bool is_ideal = false;
    std::size_t dim() const noexcept { return space.dim(); }
};

SubalgebraHandle make_handle(const LieAlgebra& L, Subspace space);
bool is_subalgebra(const LieAlgebra& L, const Subspace& s);
bool is_ideal(const LieAlgebra& L, const Subspace& s);

// Span of all [a, b] with a in A and b in B.
Subspace bracket_spaces(const LieAlgebra& L, const Subspace& a, const Subspace& b);
// Smallest subspace containing seeds and stable under the given matrices.
Subspace spin_under(const Field& f, std::size_t n, const std::vector<Vec>& seeds, const std::vector<Matrix>& mats);

SubalgebraHandle subalgebra_closure(const LieAlgebra& L, const std::vector<Vec>& gens);
SubalgebraHandle ideal_closure(const LieAlgebra& L, const std::vector<Vec>& gens);
SubalgebraHandle centralizer(const LieAlgebra& L, const Subspace& v);
SubalgebraHandle normalizer(const LieAlgebra& L, const Subspace& v);
SubalgebraHandle center(const LieAlgebra& L);

std::vector<Subspace> derived_series(const LieAlgebra& L);
std::vector<Subspace> derived_series(const LieAlgebra& L, const Subspace& s);
std::vector<Subspace> lower_central_series(const LieAlgebra& L);
std::vector<Subspace> lower_central_series(const LieAlgebra& L, const Subspace& s);
bool is_solvable(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L, const Subspace& s);
bool is_nilpotent(const LieAlgebra& L);
bool is_abelian(const LieAlgebra& L);
bool is_abelian(const LieAlgebra& L, const Subspace& s);

// Z-grading by basis vectors: b_i has degree degree[i].
struct Grading {
    std::vector<int> degree;
    std::map<int, std::vector<std::size_t>> components;  // degree -> basis indices
    bool additive = false;                               // [L_i, L_j] inside L_{i+j}
    Subspace component(const LieAlgebra& L, int deg) const;
    std::size_t component_dim(int deg) const;
};

Grading make_grading(const LieAlgebra& L, std::vector<int> degree);

// Largest ideal of L inside v.
SubalgebraHandle largest_ideal_in(const LieAlgebra& L, const Subspace& v);

// The y with ad(y) = ad(x)^p, or nullopt when ad(x)^p is not inner.
// Throws CenterNonzero when L has a centre.
std::optional<Vec> p_power(const LieAlgebra& L, std::span<const Elem> x);
bool is_toral(const LieAlgebra& L, std::span<const Elem> x);
bool is_ad_nilpotent(const LieAlgebra& L, std::span<const Elem> x);
// True when repeated p-th powers reach 0 within dim steps.
bool p_power_nilpotent(const LieAlgebra& L, std::span<const Elem> x);

// Lie algebra spanned by matrices; basis = greedy independent subset in order.
struct MatrixLieAlgebra {
    LieAlgebra algebra;
    std::vector<Matrix> matrices;
    std::optional<Vec> coordinates(const Matrix& m) const;
    Matrix matrix_of(std::span<const Elem> coords) const;
    // Element whose matrix is the p-th power of x's matrix, if it lies in the span.
    std::optional<Vec> p_power(std::span<const Elem> x) const;

    std::shared_ptr<const Coordinatizer> index;  // flattened matrices
};

// Throws NotSubalgebra if the span is not closed under commutators.
MatrixLieAlgebra matrix_lie_algebra(const std::vector<Matrix>& spanning, std::vector<std::string> labels = {},
                                    std::string name = {});
// Span closed under commutators.
std::vector<Matrix> commutator_closure(const std::vector<Matrix>& gens);
// Span closed under commutators and p-th powers.
std::vector<Matrix> restricted_closure(const std::vector<Matrix>& gens);

// Restricted subalgebra of L generated by h (inner mode).
SubalgebraHandle p_closure(const LieAlgebra& L, const Subspace& h);

struct DerivationAlgebra {
    MatrixLieAlgebra der;
    Matrix ad_embedding;  // column i = coordinates of ad(b_i)
};

DerivationAlgebra derivations(const LieAlgebra& L);

Elem killing_form(const LieAlgebra& L, std::span<const Elem> x, std::span<const Elem> y);

struct Quotient {
    LieAlgebra algebra;
    Matrix projection;  // quotient dim x parent dim
    Matrix section;     // parent dim x quotient dim
    std::vector<std::size_t> complement;
};

// Throws NotIdeal.
Quotient quotient(const LieAlgebra& L, const Subspace& ideal, std::string name = {});

struct Restriction {
    LieAlgebra algebra;
    Matrix inclusion;  // parent dim x sub dim; columns are the basis of the subspace
    Subspace space;
    // Coordinates in the subalgebra basis of a parent vector lying in it.
    Vec coords(std::span<const Elem> parent_vec) const;
    Vec embed(std::span<const Elem> sub_vec) const;
    Subspace embed(const Subspace& sub) const;
    Subspace pull(const Subspace& parent_sub) const;  // intersection, in sub coordinates
};

// Throws NotSubalgebra.
Restriction restrict_to(const LieAlgebra& L, const Subspace& s, std::string name = {});

// The algebra rewritten in the basis given by the columns of u (invertible).
LieAlgebra rebase(const LieAlgebra& L, const Matrix& u, std::vector<std::string> labels = {}, std::string name = {});

// Direct sum with the basis of a followed by the basis of b.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string name = {});

}  // namespace modlie

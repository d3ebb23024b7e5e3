#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modlie/lie_algebra.hpp"
#include "modlie/liealg.hpp"
#include "modlie/matrix.hpp"

namespace modlie {

inline constexpr std::uint64_t kDefaultModuleSeed = 0xC0FFEE;
inline constexpr std::size_t kDefaultModuleBudget = 400;

// A module given only by matrices generating the acting associative algebra.
// Submodules are exactly the subspaces stable under every generator.
struct GenRep {
    Field field;
    std::size_t dim = 0;
    std::vector<Matrix> gens;

    // Action on an invariant subspace, in the coordinates of its RREF basis.
    GenRep sub(const Subspace& w) const;
    // Action on the quotient by an invariant subspace, on its complement indices.
    GenRep quotient(const Subspace& w) const;
    // Contragredient action -g^T.
    GenRep dual() const;
    bool is_invariant(const Subspace& w) const;
};

// Representation of a Lie algebra: one matrix per basis element.
class ModuleRep {
public:
    ModuleRep() = default;
    // Validates rho([x, y]) = [rho(x), rho(y)] unless validate is false.
    ModuleRep(LieAlgebra algebra, std::vector<Matrix> action, bool validate = true);
    static ModuleRep adjoint(const LieAlgebra& L);

    const LieAlgebra& algebra() const noexcept { return algebra_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Matrix>& action() const noexcept { return action_; }
    const Field& field() const noexcept { return algebra_.field(); }
    Matrix of(std::span<const Elem> x) const;
    // Images of the algebra's Lie generators; these generate the same submodule lattice.
    GenRep generators() const;
    // Brackets checked on generator/basis pairs; their closure is the whole algebra.
    bool check_homomorphism() const;

    ModuleRep dual() const;
    ModuleRep sub(const Subspace& w) const;
    ModuleRep quotient(const Subspace& w) const;

private:
    LieAlgebra algebra_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
};

struct SplitResult {
    std::optional<Subspace> submodule;  // proper nonzero submodule, or nullopt when irreducible
    std::size_t attempts = 0;
};

// One MeatAxe round: either a proper submodule or a certificate of irreducibility.
SplitResult split(const GenRep& rep, std::uint64_t seed = kDefaultModuleSeed,
                  std::size_t budget = kDefaultModuleBudget);

Subspace spin(const GenRep& rep, const std::vector<Vec>& seeds);
Subspace spin(const ModuleRep& rep, const std::vector<Vec>& seeds);

bool is_irreducible(const GenRep& rep, std::uint64_t seed = kDefaultModuleSeed);
bool is_irreducible(const ModuleRep& rep, std::uint64_t seed = kDefaultModuleSeed);

// Some irreducible submodule.
Subspace find_minimal_submodule(const GenRep& rep, std::uint64_t seed = kDefaultModuleSeed);

struct CompositionSeries {
    std::vector<Subspace> chain;  // 0 = chain[0] < ... < chain.back() = V
    std::vector<GenRep> factors;  // factors[i] acts on chain[i+1] / chain[i]
    Matrix adapted;               // columns: a basis through which every chain[i] is a leading block
};

CompositionSeries composition_series(const GenRep& rep, std::uint64_t seed = kDefaultModuleSeed);

// Vectors v in rep that are images of the first unit vector of the irreducible t under a homomorphism.
Subspace hom_images(const GenRep& t, const GenRep& rep);
bool isomorphic_irreducibles(const GenRep& a, const GenRep& b);

// Direct-sum decomposition of the socle into certified minimal submodules.
std::vector<Subspace> minimal_submodules(const GenRep& rep, std::uint64_t seed = kDefaultModuleSeed);
std::vector<Subspace> minimal_submodules(const ModuleRep& rep, std::uint64_t seed = kDefaultModuleSeed);
Subspace socle(const GenRep& rep, std::uint64_t seed = kDefaultModuleSeed);
Subspace socle(const ModuleRep& rep, std::uint64_t seed = kDefaultModuleSeed);

// Largest solvable ideal.
SubalgebraHandle radical(const LieAlgebra& L, std::uint64_t seed = kDefaultModuleSeed);

// Largest ideal of the subalgebra s of ambient consisting of ambient-nilpotent elements,
// in ambient coordinates.  Throws NotComputable when the result fails verification.
SubalgebraHandle nil_ideal(const LieAlgebra& ambient, const Subspace& s, std::uint64_t seed = kDefaultModuleSeed);

// Simplicity test: nonabelian, perfect, adjoint module irreducible.
bool is_simple(const LieAlgebra& L, std::uint64_t seed = kDefaultModuleSeed);

Subspace joint_kernel(const ModuleRep& rep, const std::vector<Vec>& elements);
Subspace joint_kernel(const std::vector<Matrix>& mats, const Field& f, std::size_t dim);
Elem trace_form(const ModuleRep& rep, std::span<const Elem> x, std::span<const Elem> y);

// Action of the subalgebra s of L on L, as matrices for the Lie generators of s.
GenRep restricted_adjoint(const LieAlgebra& L, const Subspace& s);

}  // namespace modlie

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "modlie/lie_algebra.hpp"
#include "modlie/liealg.hpp"
#include "modlie/matrix.hpp"
#include "modlie/modrep.hpp"

namespace modlie {

// Descending chain M_(i), -q <= i <= r+1, with M_(-q) = ambient and M_(r+1) = 0.
struct Filtration {
    LieAlgebra ambient;
    int q = 0;
    int r = 0;
    std::map<int, Subspace> chain;
    std::uint64_t minus_one_seed = 0;

    // M_(i) for any integer i, extended by M_(i) = ambient below -q and 0 above r.
    const Subspace& at(int i) const;
    std::vector<std::size_t> dims() const;  // from M_(-q) down to M_(r+1)
    // Basis through which every M_(i) is spanned by the columns of degree >= i.
    Matrix adapted;
    std::vector<int> adapted_degree;
    LieAlgebra adapted_algebra;  // ambient rewritten in the adapted basis
};

// Preimage of the first minimal M-submodule of ambient / M.
Subspace choose_minus_one(const LieAlgebra& ambient, const Subspace& M, std::uint64_t seed = kDefaultModuleSeed);

// Throws NotStable unless M is a subalgebra, M < M_(-1), [M, M_(-1)] lies in M_(-1),
// the negative part reaches the ambient algebra and the positive part reaches 0.
Filtration build_filtration(const LieAlgebra& ambient, const Subspace& M, const Subspace& M_minus1,
                            std::uint64_t seed = 0);

// [M_(i), M_(j)] inside M_(i+j) for all i, j.
bool check_compatibility(const Filtration& f);
// x^[p] in M_(pk) for basis elements x of M_(k), k > 0; requires a centreless ambient.
bool check_p_compatibility(const Filtration& f);

struct GradedAlgebra {
    LieAlgebra algebra;   // basis = adapted basis of the filtration
    std::vector<int> degree;
    Grading grading;
    std::map<int, std::size_t> dims() const;
};

GradedAlgebra graded_algebra(const Filtration& f);

// Largest ideal of G inside the sum of negative components; graded by construction.
SubalgebraHandle max_graded_ideal_neg(const GradedAlgebra& g);
std::map<int, std::size_t> graded_dims(const GradedAlgebra& g, const Subspace& s);

}  // namespace modlie

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "modlie/field.hpp"
#include "modlie/matrix.hpp"

namespace modlie {

struct Term {
    std::uint32_t index;
    Elem coeff;
};

// Finite-dimensional Lie algebra given by structure constants on a labelled
// basis.  Copies share the same immutable data and identity.
class LieAlgebra {
public:
    LieAlgebra() = default;
    // table[(i*dim + j)*dim + k] is the coefficient of b_k in [b_i, b_j].
    LieAlgebra(Field f, std::vector<std::string> labels, std::vector<Elem> table, std::string name = {});

    // Builds the table from [b_i, b_j] for i < j; the rest follows by antisymmetry.
    static LieAlgebra from_bracket(Field f, std::vector<std::string> labels,
                                   const std::function<Vec(std::size_t, std::size_t)>& bracket,
                                   std::string name = {});

    bool valid() const noexcept { return static_cast<bool>(d_); }
    const Field& field() const noexcept;
    std::size_t dim() const noexcept;
    const std::vector<std::string>& labels() const noexcept;
    const std::string& label(std::size_t i) const;
    const std::string& name() const noexcept;
    std::uintptr_t id() const noexcept { return reinterpret_cast<std::uintptr_t>(d_.get()); }
    LieAlgebra renamed(std::string name) const;

    std::span<const Elem> bracket_basis(std::size_t i, std::size_t j) const noexcept;
    std::span<const Term> sparse(std::size_t i, std::size_t j) const noexcept;
    Elem structure_constant(std::size_t i, std::size_t j, std::size_t k) const noexcept;
    const std::vector<Elem>& table() const noexcept;

    Vec bracket(std::span<const Elem> x, std::span<const Elem> y) const;
    // [b_i, y]
    Vec bracket_with_basis(std::size_t i, std::span<const Elem> y) const;
    // ad(x) with ad(x) * y = [x, y].
    Matrix ad(std::span<const Elem> x) const;
    Matrix ad_basis(std::size_t i) const;
    Vec zero() const { return Vec(dim(), 0); }
    Vec basis_vector(std::size_t i) const { return unit_vector(dim(), i); }

    // [b_i, b_i] = 0 and [b_i, b_j] = -[b_j, b_i].
    bool check_antisymmetry() const;
    // Exhaustive over basis triples i < j < k.
    bool check_jacobi() const;
    // Sampled triples, for very large algebras.
    bool check_jacobi_sampled(std::size_t samples, std::uint64_t seed) const;

    // A small list of vectors generating the algebra (seeded, deterministic).
    const std::vector<Vec>& lie_generators() const;
    const std::vector<Matrix>& generator_ads() const;

    struct AdjointSolver;
    // nullptr when the centre is nonzero.
    const AdjointSolver* adjoint_solver() const;
    // y with ad(y) = m, or nullopt.  Requires trivial centre.
    std::optional<Vec> solve_ad(const Matrix& m) const;
    bool centerless() const;

private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

// Element with a tag naming its parent algebra.
struct Element {
    std::uintptr_t parent = 0;
    Vec coords;
};

Element make_element(const LieAlgebra& L, Vec coords);
Element bracket(const LieAlgebra& L, const Element& x, const Element& y);

// Structure-constant dump: "dim p k" then "i j k c" for every nonzero entry,
// ordered by (i, j, k).  Coefficients use the integer field encoding.
void write_dump(const LieAlgebra& L, std::ostream& out);
LieAlgebra read_dump(std::istream& in, std::string name = {});
std::string dump_string(const LieAlgebra& L);

}  // namespace modlie
